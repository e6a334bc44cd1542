#include "zz/poly.hpp"

#include "zz/errors.hpp"

#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace zz {

void Poly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::variable() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

Poly Poly::monomial(const Rational& c, int deg) {
    if (deg < 0) throw domain_error("monomial: negative degree");
    std::vector<Rational> v(static_cast<size_t>(deg) + 1, Rational(0));
    v.back() = c;
    return Poly(std::move(v));
}

Rational Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
    return c_[static_cast<size_t>(i)];
}

const Rational& Poly::leading() const {
    if (c_.empty()) throw domain_error("leading: zero polynomial");
    return c_.back();
}

int Poly::vanishing_order() const {
    if (c_.empty()) throw domain_error("vanishing_order: zero polynomial");
    int i = 0;
    while (c_[static_cast<size_t>(i)] == 0) ++i;
    return i;
}

bool Poly::is_monomial() const {
    int nz = 0;
    for (const auto& c : c_)
        if (c != 0) ++nz;
    return nz == 1;
}

std::vector<int> Poly::support() const {
    std::vector<int> out;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) out.push_back(static_cast<int>(i));
    return out;
}

Rational Poly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize();
    return *this;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<int>(i)) * c_[i];
    return Poly(std::move(d));
}

Poly Poly::scaled_arg(const Rational& beta) const {
    std::vector<Rational> v(c_);
    Rational pw(1);
    for (size_t i = 0; i < v.size(); ++i) {
        v[i] *= pw;
        pw *= beta;
    }
    return Poly(std::move(v));
}

Poly Poly::shifted_arg(const Rational& t) const {
    // Horner on p(w + t): fold from the top coefficient down.
    Poly acc;
    Poly shift(std::vector<Rational>{t, Rational(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * shift + Poly::constant(*it);
    return acc;
}

Poly Poly::composed_affine(const Rational& delta, const Rational& t) const {
    return shifted_arg(t).scaled_arg(delta);
}

Poly Poly::monic() const {
    if (c_.empty()) throw domain_error("monic: zero polynomial");
    Rational inv = Rational(1) / c_.back();
    return inv * *this;
}

std::string Poly::text(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = c_[static_cast<size_t>(i)];
        if (c == 0) continue;
        Rational a = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit = (a == 1);
        if (i == 0) {
            os << rat_text(a);
        } else {
            if (!unit) os << rat_text(a) << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly operator+(Poly a, const Poly& b) {
    a += b;
    return a;
}

Poly operator-(Poly a, const Poly& b) {
    a -= b;
    return a;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    std::vector<Rational> v(ca.size() + cb.size() - 1, Rational(0));
    for (size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] == 0) continue;
        for (size_t j = 0; j < cb.size(); ++j) v[i + j] += ca[i] * cb[j];
    }
    return Poly(std::move(v));
}

Poly operator*(const Rational& s, const Poly& p) {
    std::vector<Rational> v(p.coeffs());
    for (auto& c : v) c *= s;
    return Poly(std::move(v));
}

bool operator==(const Poly& a, const Poly& b) { return a.coeffs() == b.coeffs(); }

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw domain_error("divmod: division by zero polynomial");
    if (num.degree() < den.degree()) return {Poly(), num};
    std::vector<Rational> r(num.coeffs());
    std::vector<Rational> q(static_cast<size_t>(num.degree() - den.degree()) + 1, Rational(0));
    const auto& d = den.coeffs();
    const Rational& lead = d.back();
    for (int i = num.degree(); i >= den.degree(); --i) {
        Rational c = r[static_cast<size_t>(i)];
        if (c == 0) continue;
        Rational f = c / lead;
        q[static_cast<size_t>(i - den.degree())] = f;
        for (size_t j = 0; j < d.size(); ++j)
            r[static_cast<size_t>(i - den.degree()) + j] -= f * d[j];
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

std::optional<Poly> divide_exact(const Poly& num, const Poly& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a.monic();
}

std::vector<Poly> squarefree_decomposition(const Poly& p) {
    if (p.is_zero()) throw domain_error("squarefree_decomposition: zero polynomial");
    std::vector<Poly> out;
    if (p.degree() == 0) return out;
    Poly f = p.monic();
    Poly fp = f.derivative();
    Poly a0 = poly_gcd(f, fp);
    Poly b = *divide_exact(f, a0);
    Poly c = *divide_exact(fp, a0);
    Poly d = c - b.derivative();
    while (true) {
        if (b.degree() == 0) break;
        Poly fi = poly_gcd(b, d);
        out.push_back(fi);
        b = *divide_exact(b, fi);
        c = *divide_exact(d, fi);
        d = c - b.derivative();
    }
    return out;
}

bool operator==(const MultiplicityEntry& a, const MultiplicityEntry& b) {
    return a.multiplicity == b.multiplicity && a.count == b.count;
}

std::vector<MultiplicityEntry> multiplicity_profile(const Poly& p) {
    auto sq = squarefree_decomposition(p);
    std::vector<MultiplicityEntry> out;
    for (size_t i = 0; i < sq.size(); ++i) {
        int deg = sq[i].degree();
        if (deg > 0) out.push_back({static_cast<int>(i) + 1, deg});
    }
    return out;
}

int distinct_root_count(const Poly& p) {
    int total = 0;
    for (const auto& e : multiplicity_profile(p)) total += e.count;
    return total;
}

int root_multiplicity(const Poly& p, const Rational& r) {
    if (p.is_zero()) throw domain_error("root_multiplicity: zero polynomial");
    Poly factor(std::vector<Rational>{-r, Rational(1)});
    Poly cur = p;
    int m = 0;
    while (true) {
        auto q = divide_exact(cur, factor);
        if (!q) break;
        cur = std::move(*q);
        ++m;
    }
    return m;
}

namespace {

// All positive divisors of |n|, or nullopt when factoring would be too costly.
std::optional<std::vector<Int>> positive_divisors(Int n) {
    if (n < 0) n = -n;
    if (n == 0) return std::nullopt;
    std::map<Int, int> fac;
    Int m = n;
    for (Int d = 2; d * d <= m && d <= 1000000; ++d) {
        while (m % d == 0) {
            ++fac[d];
            m /= d;
        }
    }
    if (m > 1) {
        if (m > 1000000000000LL) {
            // Beyond trial range: accept only if prime, otherwise give up.
            if (!boost::multiprecision::miller_rabin_test(m, 32)) return std::nullopt;
        }
        ++fac[m];
    }
    std::vector<Int> divs{Int(1)};
    for (const auto& [prime, exp] : fac) {
        size_t base = divs.size();
        Int pw(1);
        for (int e = 1; e <= exp; ++e) {
            pw *= prime;
            for (size_t i = 0; i < base; ++i) {
                divs.push_back(divs[i] * pw);
                if (divs.size() > 200000) return std::nullopt;
            }
        }
    }
    return divs;
}

} // namespace

std::vector<std::pair<Rational, int>> rational_roots(const Poly& p,
                                                     const std::vector<Rational>& hints) {
    if (p.is_zero()) throw domain_error("rational_roots: zero polynomial");
    std::vector<std::pair<Rational, int>> out;
    Poly cur = p;
    int zm = root_multiplicity(cur, Rational(0));
    if (zm > 0) {
        out.push_back({Rational(0), zm});
        for (int i = 0; i < zm; ++i)
            cur = *divide_exact(cur, Poly::variable());
    }
    if (cur.degree() >= 1) {
        // Clear denominators to integer coefficients.
        Int den(1);
        for (const auto& c : cur.coeffs()) den = boost::multiprecision::lcm(den, denominator(c));
        std::vector<Int> ic;
        for (const auto& c : cur.coeffs()) {
            Rational scaled = c * Rational(den);
            ic.push_back(numerator(scaled));
        }
        Int g(0);
        for (const auto& c : ic) g = boost::multiprecision::gcd(g, c);
        if (g > 1)
            for (auto& c : ic) c /= g;

        std::set<Rational> candidates;
        auto p_divs = positive_divisors(ic.front());
        auto q_divs = positive_divisors(ic.back());
        if (p_divs && q_divs) {
            for (const auto& a : *p_divs)
                for (const auto& b : *q_divs) {
                    candidates.insert(Rational(a, b));
                    candidates.insert(Rational(-a, b));
                }
        } else {
            // Guard tripped: fall back to cheap candidates. Sound but may
            // miss roots of polynomials with astronomically large constant
            // or leading coefficients.
            candidates.insert(Rational(1));
            candidates.insert(Rational(-1));
            for (const auto& h : hints) candidates.insert(h);
        }
        for (const auto& r : candidates) {
            if (cur(r) != 0) continue;
            int m = root_multiplicity(cur, r);
            out.push_back({r, m});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

} // namespace zz
