#pragma once

#include "zz/poly.hpp"

#include <optional>
#include <vector>

namespace zz {

// p2(w) = alpha * p(beta*w)
struct ScaleWitness {
  Rational alpha, beta;
};
bool operator==(const ScaleWitness& a, const ScaleWitness& b);
bool witness_less(const ScaleWitness& a, const ScaleWitness& b); // key order (beta, alpha)

// q2(w) = gamma * q(delta*w + t)
struct AffineWitness {
  Rational gamma, delta, t;
};
bool operator==(const AffineWitness& a, const AffineWitness& b);
bool witness_less(const AffineWitness& a, const AffineWitness& b); // key order (delta, gamma, t)

// Solutions of p2 = alpha * p(beta w). The one-parameter kind arises exactly
// for monomial inputs: beta ranges over all nonzero rationals with alpha forced.
class ScaleSolutions {
public:
  enum class Kind { Empty, Finite, OneParameter };

  static ScaleSolutions none();
  static ScaleSolutions finite(std::vector<ScaleWitness> ws); // sorted internally
  static ScaleSolutions one_parameter(int n, const Rational& c1, const Rational& c2);

  Kind kind() const { return kind_; }
  bool empty() const { return kind_ == Kind::Empty; }
  // Finite: the full sorted list. OneParameter: the beta=1 representative.
  const std::vector<ScaleWitness>& witnesses() const { return ws_; }
  bool contains(const Rational& alpha, const Rational& beta) const;
  std::optional<ScaleWitness> witness_for(const Rational& beta) const;
  ScaleWitness smallest() const; // pre: !empty(); one-parameter: representative

private:
  Kind kind_ = Kind::Empty;
  std::vector<ScaleWitness> ws_;
  int n_ = 0;        // one-parameter: p = c1 w^n, p2 = c2 w^n, alpha = c2/(c1 beta^n)
  Rational c1_, c2_;
};

// Solutions of q2 = gamma * q(delta w + t). One-parameter kind: the depressed
// form of q is a monomial; delta ranges over nonzero rationals with gamma and
// t forced (t = delta*s2 - s1 through the depression shifts).
class AffineSolutions {
public:
  enum class Kind { Empty, Finite, OneParameter };

  static AffineSolutions none();
  static AffineSolutions finite(std::vector<AffineWitness> ws);
  static AffineSolutions one_parameter(int n, const Rational& lc1, const Rational& lc2,
                                       const Rational& s1, const Rational& s2);

  Kind kind() const { return kind_; }
  bool empty() const { return kind_ == Kind::Empty; }
  const std::vector<AffineWitness>& witnesses() const { return ws_; }
  bool contains(const Rational& gamma, const Rational& delta, const Rational& t) const;
  std::optional<AffineWitness> witness_for(const Rational& delta) const;
  AffineWitness smallest() const; // pre: !empty(); one-parameter: delta=1 representative

  // Depression shift data (one-parameter kind only).
  const Rational& s1() const { return s1_; }
  const Rational& s2() const { return s2_; }

private:
  Kind kind_ = Kind::Empty;
  std::vector<AffineWitness> ws_;
  int n_ = 0;
  Rational lc1_, lc2_, s1_, s2_;
};

// All (alpha, beta) with p2(w) = alpha*p(beta*w). Degree or support mismatch
// yields the empty set. Pre: both nonzero.
ScaleSolutions scale_equivalences(const Poly& p, const Poly& p2);

// All (gamma, delta, t) with q2(w) = gamma*q(delta*w + t); t forced to 0 when
// allow_shift is false. Pre: both nonzero.
AffineSolutions affine_equivalences(const Poly& q, const Poly& q2, bool allow_shift);

// stabilizer(p, s) = affine_equivalences(p, p, s); a group under composition.
AffineSolutions stabilizer(const Poly& p, bool allow_shift);

// Group operations on affine witnesses (composition acts on the argument:
// (g1,d1,t1)*(g2,d2,t2) substitutes the second into the first).
AffineWitness compose(const AffineWitness& w1, const AffineWitness& w2);
AffineWitness inverse(const AffineWitness& w);

} // namespace zz
