#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace zz {

using Int = boost::multiprecision::cpp_int;

// Always canonical: lowest terms, positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// Serialized form with the denominator always present: "3/1", "-1/2".
std::string rat_json(const Rational& r);

// Human form: "3", "-1/2".
std::string rat_text(const Rational& r);

// Accepts "p" or "p/q" with optional sign and surrounding whitespace.
std::optional<Rational> rat_parse(const std::string& s);

// Exact integer k-th root: a with a^k == n, if one exists. k >= 1.
// Negative n is accepted for odd k only.
std::optional<Int> exact_iroot(const Int& n, unsigned k);

// Exact rational k-th root: for odd k the unique real root, for even k the
// positive one (the caller supplies the sign choice). k >= 1.
std::optional<Rational> exact_root(const Rational& r, unsigned k);

// b^e for integer e (negative e inverts; pre: b != 0 when e < 0).
Rational rat_pow(const Rational& b, int e);

// Deterministic witness ordering: |a| ascending, then positive before negative.
bool key_less(const Rational& a, const Rational& b);

} // namespace zz
