#include "zz/pair.hpp"

#include "zz/errors.hpp"

namespace zz {

const char* case_name(CaseTag c) {
    switch (c) {
    case CaseTag::I:
        return "I";
    case CaseTag::II:
        return "II";
    case CaseTag::III:
        return "III";
    }
    return "?";
}

PairRepr PairRepr::make(Poly P, Poly Q) {
    if (P.degree() < 1 || Q.degree() < 1)
        throw domain_error("PairRepr: both polynomials must have degree at least 1");
    return PairRepr{std::move(P), std::move(Q)};
}

bool operator==(const PairRepr& a, const PairRepr& b) { return a.P == b.P && a.Q == b.Q; }

CaseTag classify_case(const PairRepr& r) {
    if (r.P(Rational(0)) != 0) return CaseTag::I;
    if (r.Q(Rational(0)) != 0) return CaseTag::II;
    return CaseTag::III;
}

const char* situation_name(Situation s) {
    switch (s) {
    case Situation::Ia:
        return "Ia";
    case Situation::Ib:
        return "Ib";
    case Situation::II:
        return "II";
    case Situation::III:
        return "III";
    }
    return "?";
}

Situation classify_situation(const PairRepr& r, const Rational& lambda) {
    switch (classify_case(r)) {
    case CaseTag::II:
        return Situation::II;
    case CaseTag::III:
        return Situation::III;
    case CaseTag::I:
        break;
    }
    return r.Q(lambda) == 0 ? Situation::Ib : Situation::Ia;
}

ZigzagType type_of(const PairRepr& r) {
    return {0, -1, -(r.P.degree() + 1), -(r.Q.degree() + 1)};
}

} // namespace zz
