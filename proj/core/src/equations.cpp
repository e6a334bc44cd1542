#include "zz/equations.hpp"

#include "zz/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace zz {

namespace {

using ojson = nlohmann::ordered_json;

// Expanded P(x)*Q(u), monomials ordered by total degree descending, then
// x-degree descending.
std::string product_canonical(const Poly& p, const Poly& q) {
    struct Term {
        int i, j;
        Rational c;
    };
    std::vector<Term> terms;
    for (int i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i) == 0) continue;
        for (int j = 0; j <= q.degree(); ++j) {
            if (q.coeff(j) == 0) continue;
            terms.push_back({i, j, p.coeff(i) * q.coeff(j)});
        }
    }
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
        if (a.i + a.j != b.i + b.j) return a.i + a.j > b.i + b.j;
        return a.i > b.i;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        Rational mag = t.c < 0 ? Rational(-t.c) : t.c;
        if (first) {
            if (t.c < 0) os << "-";
            first = false;
        } else {
            os << (t.c < 0 ? " - " : " + ");
        }
        std::vector<std::string> parts;
        if (mag != 1 || (t.i == 0 && t.j == 0)) parts.push_back(rat_text(mag));
        if (t.i == 1) parts.push_back("x");
        if (t.i > 1) parts.push_back("x^" + std::to_string(t.i));
        if (t.j == 1) parts.push_back("u");
        if (t.j > 1) parts.push_back("u^" + std::to_string(t.j));
        for (size_t k = 0; k < parts.size(); ++k) {
            if (k) os << "*";
            os << parts[k];
        }
    }
    if (first) os << "0";
    return os.str();
}

// Compact expansion without spaces, display style: "x^2-2", "2x-3".
std::string tight_text(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = p.degree(); i >= 0; --i) {
        const Rational c = p.coeff(i);
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? "-" : "+");
        }
        if (i == 0) {
            os << rat_text(mag);
        } else {
            if (mag != 1) {
                if (denominator(mag) == 1)
                    os << rat_text(mag);
                else
                    os << "(" << rat_text(mag) << ")";
            }
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

// Vanishing-order factored display: x^2(x-1), u(u-1), (x-1), 2x^3.
std::string factored_display(const Poly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    int k = p.vanishing_order();
    Poly g = p;
    for (int i = 0; i < k; ++i) g = *divide_exact(g, Poly::variable());
    std::ostringstream os;
    if (g.degree() == 0) {
        // Pure monomial c*var^k.
        const Rational c = g.coeff(0);
        if (c == 1 && k > 0) {
        } else if (c == -1 && k > 0) {
            os << "-";
        } else {
            if (denominator(c) == 1 || k == 0)
                os << rat_text(c);
            else
                os << "(" << rat_text(c) << ")";
        }
        if (k >= 1) os << var;
        if (k >= 2) os << "^" << k;
        return os.str();
    }
    if (k == 1) os << var;
    if (k >= 2) os << var << "^" << k;
    os << "(" << tight_text(g, var) << ")";
    return os.str();
}

} // namespace

std::string EquationTriple::canonical_text() const {
    std::ostringstream os;
    os << "yu = " << yu_rhs.text("x") << "\n";
    os << "vx = " << vx_rhs.text("u") << "\n";
    os << "yv = " << product_canonical(P, Q) << "\n";
    return os.str();
}

std::string EquationTriple::display_text() const {
    std::ostringstream os;
    os << "yu = " << factored_display(yu_rhs, "x") << "\n";
    os << "vx = " << factored_display(vx_rhs, "u") << "\n";
    os << "yv = " << factored_display(P, "x") << factored_display(Q, "u") << "\n";
    return os.str();
}

std::string EquationTriple::json() const {
    ojson j;
    j["canonical"]["yu"] = yu_rhs.text("x");
    j["canonical"]["vx"] = vx_rhs.text("u");
    j["canonical"]["yv"] = product_canonical(P, Q);
    j["display"]["yu"] = factored_display(yu_rhs, "x");
    j["display"]["vx"] = factored_display(vx_rhs, "u");
    j["display"]["yv"] = factored_display(P, "x") + factored_display(Q, "u");
    ojson pc = ojson::array(), qc = ojson::array();
    for (const auto& c : P.coeffs()) pc.push_back(rat_json(c));
    for (const auto& c : Q.coeffs()) qc.push_back(rat_json(c));
    j["P"] = std::move(pc);
    j["Q"] = std::move(qc);
    return j.dump(2);
}

EquationTriple emit_equations(const PairRepr& r) {
    EquationTriple t;
    t.P = r.P;
    t.Q = r.Q;
    t.yu_rhs = Poly::variable() * r.P;
    t.vx_rhs = Poly::variable() * r.Q;
    return t;
}

} // namespace zz
