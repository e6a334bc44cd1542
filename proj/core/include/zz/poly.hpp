#pragma once

#include "zz/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace zz {

// Dense univariate polynomial over Q, coefficients lowest degree first.
// Normal form: no trailing zero coefficients; the zero polynomial stores none.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly variable();
  static Poly monomial(const Rational& c, int deg);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& leading() const; // pre: nonzero
  int vanishing_order() const;     // multiplicity of the root 0; pre: nonzero
  bool is_monomial() const;        // exactly one nonzero coefficient
  std::vector<int> support() const;

  Rational operator()(const Rational& x) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);

  Poly derivative() const;
  Poly scaled_arg(const Rational& beta) const;  // p(beta*w)
  Poly shifted_arg(const Rational& t) const;    // p(w + t)
  Poly composed_affine(const Rational& delta, const Rational& t) const; // p(delta*w + t)
  Poly monic() const; // pre: nonzero

  // Expanded text, descending powers: "w^2 - 1/2*w + 3".
  std::string text(const std::string& var = "w") const;

private:
  std::vector<Rational> c_;
  void normalize();
};

Poly operator+(Poly a, const Poly& b);
Poly operator-(Poly a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly operator*(const Rational& s, const Poly& p);
bool operator==(const Poly& a, const Poly& b);
inline bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

// Pre: den nonzero. Returns (quotient, remainder) with deg rem < deg den.
std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den);
// Quotient when the division is exact, nullopt otherwise.
std::optional<Poly> divide_exact(const Poly& num, const Poly& den);
// Monic gcd (zero if both inputs are zero).
Poly poly_gcd(Poly a, Poly b);

// Yun squarefree decomposition: p = lc * prod_i f_i^i with the f_i monic,
// squarefree and pairwise coprime. result[i-1] = f_i. Pre: p nonzero.
std::vector<Poly> squarefree_decomposition(const Poly& p);

struct MultiplicityEntry {
  int multiplicity = 0;
  int count = 0; // distinct roots in the algebraic closure with this multiplicity
};
bool operator==(const MultiplicityEntry& a, const MultiplicityEntry& b);

// Ascending by multiplicity; sum of multiplicity*count == deg p. Pre: p nonzero.
std::vector<MultiplicityEntry> multiplicity_profile(const Poly& p);
int distinct_root_count(const Poly& p); // over the closure; pre: p nonzero

// Multiplicity of r as a root of p (0 when p(r) != 0). Pre: p nonzero.
int root_multiplicity(const Poly& p, const Rational& r);

// All rational roots with multiplicities, ascending by value. Uses divisor
// enumeration with a size guard; when the guard trips only the cheap
// candidates (0, +-1, and `hints`) are reported. Sound, possibly incomplete
// on astronomically large coefficients. Pre: p nonzero.
std::vector<std::pair<Rational, int>> rational_roots(const Poly& p,
                                                     const std::vector<Rational>& hints = {});

} // namespace zz
