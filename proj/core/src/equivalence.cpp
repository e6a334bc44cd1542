#include "zz/equivalence.hpp"

#include "zz/errors.hpp"

#include <algorithm>

namespace zz {

bool operator==(const ScaleWitness& a, const ScaleWitness& b) {
    return a.alpha == b.alpha && a.beta == b.beta;
}

bool witness_less(const ScaleWitness& a, const ScaleWitness& b) {
    if (a.beta != b.beta) return key_less(a.beta, b.beta);
    return key_less(a.alpha, b.alpha);
}

bool operator==(const AffineWitness& a, const AffineWitness& b) {
    return a.gamma == b.gamma && a.delta == b.delta && a.t == b.t;
}

bool witness_less(const AffineWitness& a, const AffineWitness& b) {
    if (a.delta != b.delta) return key_less(a.delta, b.delta);
    if (a.gamma != b.gamma) return key_less(a.gamma, b.gamma);
    return key_less(a.t, b.t);
}

ScaleSolutions ScaleSolutions::none() { return ScaleSolutions(); }

ScaleSolutions ScaleSolutions::finite(std::vector<ScaleWitness> ws) {
    ScaleSolutions s;
    if (ws.empty()) return s;
    std::sort(ws.begin(), ws.end(), [](const auto& a, const auto& b) { return witness_less(a, b); });
    s.kind_ = Kind::Finite;
    s.ws_ = std::move(ws);
    return s;
}

ScaleSolutions ScaleSolutions::one_parameter(int n, const Rational& c1, const Rational& c2) {
    ScaleSolutions s;
    s.kind_ = Kind::OneParameter;
    s.n_ = n;
    s.c1_ = c1;
    s.c2_ = c2;
    s.ws_ = {ScaleWitness{c2 / c1, Rational(1)}};
    return s;
}

bool ScaleSolutions::contains(const Rational& alpha, const Rational& beta) const {
    switch (kind_) {
    case Kind::Empty:
        return false;
    case Kind::Finite:
        return std::find(ws_.begin(), ws_.end(), ScaleWitness{alpha, beta}) != ws_.end();
    case Kind::OneParameter:
        return beta != 0 && alpha == c2_ / (c1_ * rat_pow(beta, n_));
    }
    return false;
}

std::optional<ScaleWitness> ScaleSolutions::witness_for(const Rational& beta) const {
    switch (kind_) {
    case Kind::Empty:
        return std::nullopt;
    case Kind::Finite:
        for (const auto& w : ws_)
            if (w.beta == beta) return w;
        return std::nullopt;
    case Kind::OneParameter:
        if (beta == 0) return std::nullopt;
        return ScaleWitness{c2_ / (c1_ * rat_pow(beta, n_)), beta};
    }
    return std::nullopt;
}

ScaleWitness ScaleSolutions::smallest() const {
    if (empty()) throw domain_error("ScaleSolutions::smallest: no solutions");
    return ws_.front();
}

AffineSolutions AffineSolutions::none() { return AffineSolutions(); }

AffineSolutions AffineSolutions::finite(std::vector<AffineWitness> ws) {
    AffineSolutions s;
    if (ws.empty()) return s;
    std::sort(ws.begin(), ws.end(), [](const auto& a, const auto& b) { return witness_less(a, b); });
    s.kind_ = Kind::Finite;
    s.ws_ = std::move(ws);
    return s;
}

AffineSolutions AffineSolutions::one_parameter(int n, const Rational& lc1, const Rational& lc2,
                                               const Rational& s1, const Rational& s2) {
    AffineSolutions s;
    s.kind_ = Kind::OneParameter;
    s.n_ = n;
    s.lc1_ = lc1;
    s.lc2_ = lc2;
    s.s1_ = s1;
    s.s2_ = s2;
    s.ws_ = {AffineWitness{lc2 / lc1, Rational(1), s2 - s1}};
    return s;
}

bool AffineSolutions::contains(const Rational& gamma, const Rational& delta,
                               const Rational& t) const {
    switch (kind_) {
    case Kind::Empty:
        return false;
    case Kind::Finite:
        return std::find(ws_.begin(), ws_.end(), AffineWitness{gamma, delta, t}) != ws_.end();
    case Kind::OneParameter:
        return delta != 0 && gamma == lc2_ / (lc1_ * rat_pow(delta, n_)) &&
               t == delta * s2_ - s1_;
    }
    return false;
}

std::optional<AffineWitness> AffineSolutions::witness_for(const Rational& delta) const {
    switch (kind_) {
    case Kind::Empty:
        return std::nullopt;
    case Kind::Finite:
        for (const auto& w : ws_)
            if (w.delta == delta) return w;
        return std::nullopt;
    case Kind::OneParameter:
        if (delta == 0) return std::nullopt;
        return AffineWitness{lc2_ / (lc1_ * rat_pow(delta, n_)), delta, delta * s2_ - s1_};
    }
    return std::nullopt;
}

AffineWitness AffineSolutions::smallest() const {
    if (empty()) throw domain_error("AffineSolutions::smallest: no solutions");
    return ws_.front();
}

ScaleSolutions scale_equivalences(const Poly& p, const Poly& p2) {
    if (p.is_zero() || p2.is_zero())
        throw domain_error("scale_equivalences: zero polynomial");
    if (p.support() != p2.support()) return ScaleSolutions::none();
    if (p.is_monomial()) {
        int n = p.degree();
        return ScaleSolutions::one_parameter(n, p.leading(), p2.leading());
    }
    auto sup = p.support();
    int i = sup[0], j = sup[1];
    unsigned k = static_cast<unsigned>(j - i);
    Rational rho = (p2.coeff(j) * p.coeff(i)) / (p.coeff(j) * p2.coeff(i));
    auto r = exact_root(rho, k);
    if (!r) return ScaleSolutions::none();
    std::vector<Rational> candidates{*r};
    if (k % 2 == 0) candidates.push_back(-*r);
    std::vector<ScaleWitness> out;
    for (const auto& beta : candidates) {
        Rational alpha = p2.coeff(i) / (p.coeff(i) * rat_pow(beta, i));
        if (p2 == alpha * p.scaled_arg(beta)) out.push_back({alpha, beta});
    }
    return ScaleSolutions::finite(std::move(out));
}

AffineSolutions affine_equivalences(const Poly& q, const Poly& q2, bool allow_shift) {
    if (q.is_zero() || q2.is_zero())
        throw domain_error("affine_equivalences: zero polynomial");
    if (!allow_shift) {
        ScaleSolutions ss = scale_equivalences(q, q2);
        switch (ss.kind()) {
        case ScaleSolutions::Kind::Empty:
            return AffineSolutions::none();
        case ScaleSolutions::Kind::Finite: {
            std::vector<AffineWitness> ws;
            for (const auto& w : ss.witnesses()) ws.push_back({w.alpha, w.beta, Rational(0)});
            return AffineSolutions::finite(std::move(ws));
        }
        case ScaleSolutions::Kind::OneParameter: {
            int n = q.degree();
            return AffineSolutions::one_parameter(n, q.coeff(n), q2.coeff(n), Rational(0),
                                                  Rational(0));
        }
        }
        return AffineSolutions::none();
    }
    int n = q.degree();
    if (n != q2.degree()) return AffineSolutions::none();
    if (n == 0)
        throw domain_error("affine_equivalences: constant polynomials with shifts allowed "
                           "form a two-parameter family");
    Rational s1 = q.coeff(n - 1) / (Rational(n) * q.coeff(n));
    Rational s2 = q2.coeff(n - 1) / (Rational(n) * q2.coeff(n));
    Poly dq = q.shifted_arg(-s1);
    Poly dq2 = q2.shifted_arg(-s2);
    ScaleSolutions ss = scale_equivalences(dq, dq2);
    switch (ss.kind()) {
    case ScaleSolutions::Kind::Empty:
        return AffineSolutions::none();
    case ScaleSolutions::Kind::Finite: {
        std::vector<AffineWitness> ws;
        for (const auto& w : ss.witnesses()) {
            Rational t = w.beta * s2 - s1;
            if (q2 == w.alpha * q.composed_affine(w.beta, t))
                ws.push_back({w.alpha, w.beta, t});
        }
        return AffineSolutions::finite(std::move(ws));
    }
    case ScaleSolutions::Kind::OneParameter:
        return AffineSolutions::one_parameter(n, dq.leading(), dq2.leading(), s1, s2);
    }
    return AffineSolutions::none();
}

AffineSolutions stabilizer(const Poly& p, bool allow_shift) {
    return affine_equivalences(p, p, allow_shift);
}

AffineWitness compose(const AffineWitness& w1, const AffineWitness& w2) {
    return {w1.gamma * w2.gamma, w1.delta * w2.delta, w2.delta * w1.t + w2.t};
}

AffineWitness inverse(const AffineWitness& w) {
    return {Rational(1) / w.gamma, Rational(1) / w.delta, -w.t / w.delta};
}

} // namespace zz
