#include "zz/moduli.hpp"

#include "zz/errors.hpp"

#include "json_detail.hpp"

#include <sstream>

namespace zz {

bool operator==(const IsoWitness& a, const IsoWitness& b) {
    return a.alpha == b.alpha && a.beta == b.beta && a.gamma == b.gamma && a.delta == b.delta &&
           a.t == b.t;
}

PairIso pairs_isomorphic(const PairRepr& a, const PairRepr& b) {
    PairIso iso;
    const bool a_vanishes = a.P(Rational(0)) == 0;
    const bool b_vanishes = b.P(Rational(0)) == 0;
    if (a_vanishes != b_vanishes) return iso;
    iso.p_solutions = scale_equivalences(a.P, b.P);
    if (iso.p_solutions.empty()) return iso;
    iso.q_solutions = affine_equivalences(a.Q, b.Q, !a_vanishes);
    if (iso.q_solutions.empty()) return iso;
    iso.ok = true;
    ScaleWitness sw = iso.p_solutions.smallest();
    AffineWitness aw = iso.q_solutions.smallest();
    iso.witness = {sw.alpha, sw.beta, aw.gamma, aw.delta, aw.t};
    return iso;
}

std::vector<int> pairwise_isomorphic(const std::vector<PairRepr>& reprs) {
    std::vector<int> ids(reprs.size(), -1);
    std::vector<size_t> rep_index;
    for (size_t i = 0; i < reprs.size(); ++i) {
        for (size_t c = 0; c < rep_index.size(); ++c) {
            if (pairs_isomorphic(reprs[i], reprs[rep_index[c]])) {
                ids[i] = static_cast<int>(c);
                break;
            }
        }
        if (ids[i] < 0) {
            ids[i] = static_cast<int>(rep_index.size());
            rep_index.push_back(i);
        }
    }
    return ids;
}

namespace {

std::string scale_set_text(const ScaleSolutions& s) {
    std::ostringstream os;
    switch (s.kind()) {
    case ScaleSolutions::Kind::Empty:
        os << "{}";
        break;
    case ScaleSolutions::Kind::Finite: {
        os << "{";
        bool first = true;
        for (const auto& w : s.witnesses()) {
            if (!first) os << ", ";
            first = false;
            os << rat_text(w.beta);
        }
        os << "}";
        break;
    }
    case ScaleSolutions::Kind::OneParameter:
        os << "k*";
        break;
    }
    return os.str();
}

std::string affine_set_text(const AffineSolutions& s, bool with_t) {
    std::ostringstream os;
    switch (s.kind()) {
    case AffineSolutions::Kind::Empty:
        os << "{}";
        break;
    case AffineSolutions::Kind::Finite: {
        os << "{";
        bool first = true;
        for (const auto& w : s.witnesses()) {
            if (!first) os << ", ";
            first = false;
            if (with_t)
                os << "(" << rat_text(w.delta) << "," << rat_text(w.t) << ")";
            else
                os << rat_text(w.delta);
        }
        os << "}";
        break;
    }
    case AffineSolutions::Kind::OneParameter:
        if (with_t) {
            const Rational s1 = s.s1(), s2 = s.s2();
            os << "{(delta, delta*" << rat_text(s2) << " - " << rat_text(s1)
               << ") | delta in k*}";
        } else {
            os << "k*";
        }
        break;
    }
    return os.str();
}

} // namespace

std::string AutPairDescription::text() const {
    std::ostringstream os;
    os << "r0 = " << r0 << "\n";
    os << "a in " << scale_set_text(a_solutions) << "\n";
    if (r0 == 0) {
        os << "(delta, t) in " << affine_set_text(q_constraint, true)
           << "; c = a/delta, b = -t*a/delta\n";
    } else {
        os << "b free\n";
        os << "delta in " << affine_set_text(q_constraint, false) << "; c = a^" << (r0 + 1)
           << "/delta\n";
    }
    return os.str();
}

std::string AutPairDescription::json() const {
    detail::ojson j;
    j["r0"] = r0;
    j["b_free"] = b_free;
    j["a_solutions"] = detail::scale_solutions_json(a_solutions);
    j["q_constraint"] = detail::affine_solutions_json(q_constraint);
    if (r0 == 0) {
        j["c_rule"] = "a/delta";
        j["b_rule"] = "-t*a/delta";
    } else {
        j["c_rule"] = "a^" + std::to_string(r0 + 1) + "/delta";
        j["b_rule"] = "free";
    }
    return j.dump(2);
}

AutPairDescription aut_pair_group(const PairRepr& r) {
    AutPairDescription d;
    d.r0 = r.P(Rational(0)) == 0 ? r.P.vanishing_order() : 0;
    d.b_free = d.r0 >= 1;
    d.a_solutions = scale_equivalences(r.P, r.P);
    d.q_constraint = stabilizer(r.Q, d.r0 == 0);
    return d;
}

PairRepr reversion_target(const PairRepr& r, const Rational& lambda) {
    if (r.P(Rational(0)) != 0) return PairRepr::make(r.Q.shifted_arg(lambda), r.P);
    return PairRepr::make(r.Q, r.P);
}

bool reversions_equivalent_via_targets(const PairRepr& r, const Rational& l1,
                                       const Rational& l2) {
    if (r.P(Rational(0)) == 0) return true;
    return pairs_isomorphic(reversion_target(r, l1), reversion_target(r, l2)).ok;
}

bool reversions_equivalent_via_transport(const PairRepr& r, const Rational& l1,
                                         const Rational& l2) {
    if (r.P(Rational(0)) == 0) return true;
    AffineSolutions stab = stabilizer(r.Q, true);
    switch (stab.kind()) {
    case AffineSolutions::Kind::Empty:
        // The identity is always a stabilizer witness; unreachable.
        return l1 == l2;
    case AffineSolutions::Kind::Finite:
        for (const auto& w : stab.witnesses())
            if (l2 == w.delta * l1 + w.t) return true;
        return false;
    case AffineSolutions::Kind::OneParameter: {
        // Witnesses (delta, delta*s - s) for all delta != 0, with s the
        // depression shift: l2 = delta*(l1 + s) - s.
        const Rational s = stab.s1();
        if (l1 == -s) return l2 == -s;
        return l2 != -s;
    }
    }
    return false;
}

bool reversions_equivalent(const PairRepr& r, const Rational& l1, const Rational& l2) {
    return reversions_equivalent_via_transport(r, l1, l2);
}

} // namespace zz
