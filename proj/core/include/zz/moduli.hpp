#pragma once

#include "zz/equivalence.hpp"
#include "zz/pair.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zz {

// (alpha, beta) acts on P, (gamma, delta, t) acts on Q:
//   P2 = alpha*P(beta w),  Q2 = gamma*Q(delta w + t).
struct IsoWitness {
  Rational alpha, beta, gamma, delta, t;
};
bool operator==(const IsoWitness& a, const IsoWitness& b);

struct PairIso {
  bool ok = false;
  IsoWitness witness;        // lexicographically smallest, when ok
  ScaleSolutions p_solutions;  // full solution set on the P slot
  AffineSolutions q_solutions; // full solution set on the Q slot
  explicit operator bool() const { return ok; }
};

// Prop-2.3 style decision: scale on the P slot, affine on the Q slot with the
// shift allowed exactly when both P's are nonvanishing at 0. Mixed vanishing
// gives none.
PairIso pairs_isomorphic(const PairRepr& a, const PairRepr& b);

// Partition into isomorphism classes; returns, per input index, the class id;
// class ids numbered by first appearance.
std::vector<int> pairwise_isomorphic(const std::vector<PairRepr>& reprs);

// Description of Aut(X,B) as constraints on triangular maps
// (x,y) -> (a x + b y, c y) lifted to the pair.
struct AutPairDescription {
  int r0 = 0;        // vanishing order of P at 0
  bool b_free = false; // r0 >= 1: b unconstrained
  ScaleSolutions a_solutions;  // admissible a (scale stabilizer of P)
  AffineSolutions q_constraint; // r0 = 0: (delta,t) with c = a/delta, b = -t*a/delta
                                // r0 >= 1: delta with c = a^{r0+1}/delta (t = 0)
  std::string text() const;
  std::string json() const;
};

AutPairDescription aut_pair_group(const PairRepr& r);

// The reversion target class representative: [Q(w+lambda), P] when P(0) != 0,
// else [Q, P] (the center does not matter for the class).
PairRepr reversion_target(const PairRepr& r, const Rational& lambda);

// Route 1: compare reversion targets via pairs_isomorphic.
bool reversions_equivalent_via_targets(const PairRepr& r, const Rational& l1, const Rational& l2);
// Route 2: P(0) = 0, or an automorphism of (X,B) transports one center to the
// other: some stabilizer witness (gamma,delta,t) of Q with l2 = delta*l1 + t.
bool reversions_equivalent_via_transport(const PairRepr& r, const Rational& l1, const Rational& l2);
// The library answer (route 2; cross-validated against route 1 by tests).
bool reversions_equivalent(const PairRepr& r, const Rational& l1, const Rational& l2);

} // namespace zz
