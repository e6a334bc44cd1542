#include "zz/rational.hpp"

#include "zz/errors.hpp"

#include <cctype>
#include <sstream>

namespace zz {

std::string rat_text(const Rational& x) {
    std::ostringstream os;
    os << numerator(x);
    if (denominator(x) != 1) os << "/" << denominator(x);
    return os.str();
}

std::string rat_json(const Rational& x) {
    std::ostringstream os;
    os << numerator(x) << "/" << denominator(x);
    return os.str();
}

std::optional<Rational> rat_parse(const std::string& s) {
    auto trim = [](const std::string& t) {
        size_t a = t.find_first_not_of(" \t");
        if (a == std::string::npos) return std::string();
        size_t b = t.find_last_not_of(" \t");
        return t.substr(a, b - a + 1);
    };
    std::string body = trim(s);
    if (body.empty()) return std::nullopt;
    auto is_int = [](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    size_t slash = body.find('/');
    try {
        if (slash == std::string::npos) {
            if (!is_int(body)) return std::nullopt;
            return Rational(Int(body));
        }
        std::string num = trim(body.substr(0, slash));
        std::string den = trim(body.substr(slash + 1));
        if (!is_int(num) || !is_int(den)) return std::nullopt;
        Int d(den);
        if (d == 0) return std::nullopt;
        return Rational(Int(num), d);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

std::optional<Int> exact_iroot(const Int& n, unsigned k) {
    if (k == 0) throw domain_error("exact_iroot: k must be positive");
    if (k == 1) return n;
    if (n < 0) {
        if (k % 2 == 0) return std::nullopt;
        auto r = exact_iroot(-n, k);
        if (!r) return std::nullopt;
        return -*r;
    }
    if (n == 0 || n == 1) return n;
    // Binary search for r with r^k == n.
    Int lo = 1, hi = 2;
    while (boost::multiprecision::pow(hi, k) < n) {
        lo = hi;
        hi *= 2;
    }
    while (lo <= hi) {
        Int mid = (lo + hi) / 2;
        Int p = boost::multiprecision::pow(mid, k);
        if (p == n) return mid;
        if (p < n)
            lo = mid + 1;
        else
            hi = mid - 1;
    }
    return std::nullopt;
}

std::optional<Rational> exact_root(const Rational& x, unsigned k) {
    auto n = exact_iroot(numerator(x), k);
    if (!n) return std::nullopt;
    auto d = exact_iroot(denominator(x), k);
    if (!d) return std::nullopt;
    return Rational(*n, *d);
}

Rational rat_pow(const Rational& x, int e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        if (x == 0) throw domain_error("rat_pow: zero to a negative power");
        return Rational(1) / rat_pow(x, -e);
    }
    Rational base = x, acc(1);
    unsigned n = static_cast<unsigned>(e);
    while (n) {
        if (n & 1u) acc *= base;
        base *= base;
        n >>= 1u;
    }
    return acc;
}

bool key_less(const Rational& x, const Rational& y) {
    Rational ax = x < 0 ? Rational(-x) : x;
    Rational ay = y < 0 ? Rational(-y) : y;
    if (ax != ay) return ax < ay;
    // Equal magnitude: positive sorts before negative.
    return x > y;
}

} // namespace zz
