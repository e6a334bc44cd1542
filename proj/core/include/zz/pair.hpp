#pragma once

#include "zz/poly.hpp"
#include "zz/zigzag.hpp"

#include <string>

namespace zz {

enum class CaseTag { I, II, III };
const char* case_name(CaseTag c); // "I", "II", "III"

// A polynomial pair (P,Q) of degrees a-1, b-1 >= 1; one concrete
// representative of the class [P,Q]. Class identity is always decided by
// pairs_isomorphic, never by coefficient equality.
struct PairRepr {
  Poly P, Q;

  static PairRepr make(Poly P, Poly Q); // validates degrees >= 1
};
bool operator==(const PairRepr& a, const PairRepr& b); // representative equality only

// I: P(0) != 0.  II: P(0) = 0, Q(0) != 0.  III: P(0) = Q(0) = 0.
CaseTag classify_case(const PairRepr& r);

// Reversion-center-relative refinement of case I.
enum class Situation { Ia, Ib, II, III };
const char* situation_name(Situation s);
Situation classify_situation(const PairRepr& r, const Rational& lambda);

// Boundary zigzag type (0, -1, -(deg P + 1), -(deg Q + 1)).
ZigzagType type_of(const PairRepr& r);

} // namespace zz
