#pragma once

#include "zz/moduli.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace zz {

// One letter of a birational word between pair classes.
//
// Aut:      (x,y) -> (a x + b y, c y), source == target representative.
// Fibered:  (x,y) -> (a x + y R(y), c y) with deg R >= 1; R(0) plays b's role.
// Reversion: center lambda; target = reversion_target(source, lambda).
//   Inverse reversion letters keep the ORIGINAL center and set `inverted`,
//   so cancellation against the forward letter is definitional; for them
//   source = reversion_target(target, lambda) holds instead.
//   `unresolved` marks a case-(c) merged reversion whose center is unknown.
struct Letter {
  enum class Kind { Aut, Fibered, Reversion };
  Kind kind = Kind::Aut;
  PairRepr source, target;
  Rational a{1}, b{0}, c{1};
  Poly R;
  Rational center{0};
  bool inverted = false;
  bool unresolved = false;

  bool triangular() const { return kind != Kind::Reversion; }
};

// Constructors validate the stabilizer constraints (Aut/Fibered) or compute
// the target (Reversion). Throw domain_error on violation.
Letter make_aut(const PairRepr& at, const Rational& a, const Rational& b, const Rational& c);
Letter make_fibered(const PairRepr& at, const Rational& a, const Rational& c, Poly R);
Letter make_reversion(const PairRepr& source, const Rational& center);

Letter invert_letter(const Letter& l);
bool is_identity(const Letter& l);

// compose_fibered(l1, l2) = l1 after l2 (function-composition order):
// (a1 a2, c1 c2, R(y) = a1 R2(y) + c2 R1(c2 y)); downgraded to Aut when the
// composed R is constant. Both letters must sit at the same representative.
Letter compose_fibered(const Letter& l1, const Letter& l2);

struct BirWord {
  PairRepr base;
  std::vector<Letter> letters;
};

// Validates class-level chaining: base ~ letters[0].source and
// letters[i].target ~ letters[i+1].source.
BirWord make_word(PairRepr base, std::vector<Letter> letters);
BirWord invert_word(const BirWord& w);
BirWord concat(const BirWord& a, const BirWord& b);

// Number of non-automorphism letters (fibered + reversions).
int word_length(const BirWord& w);

// One applicable local simplification.
struct Redex {
  enum class Type {
    DropIdentityAut,   // [i]
    MergeTriangular,   // [i, i+1], same representative
    CancelReversions,  // [i..k]: reversions at i,k, auts between, target(k) ~ source(i)
    MergeUnresolved,   // [i..k]: degree-(1,1) reversion pair, merged with marker
  };
  Type type{};
  std::size_t i = 0, k = 0;
};

std::vector<Redex> find_redexes(const BirWord& w);
BirWord apply_redex(const BirWord& w, const Redex& r);
bool is_reduced(const BirWord& w);

enum class ReduceStrategy { LeftmostFirst, RightmostFirst, ReversionsFirst };
BirWord reduce_word(const BirWord& w, ReduceStrategy strategy = ReduceStrategy::LeftmostFirst);

// Exhaustive normal forms over every redex choice (confluence testing).
// Throws domain_error if the search exceeds `cap` states.
std::vector<BirWord> all_normal_forms(const BirWord& w, std::size_t cap = 100000);

// The 4-reversion cycle at a type-I base with Q(0) != 0:
//   [P,Q] -(0)-> [Q,P] -(a)-> [P(w+a),Q] -(a)-> [Q(w+a),P(w+a)] -(-a)-> [P,Q(w+a)] ~ [P,Q].
// Requires a != 0, P(a) != 0, Q(a) != 0 and the four cycle classes pairwise
// non-isomorphic; errors name the offending condition or isomorphism.
BirWord zeta_word(const PairRepr& base, const Rational& a);

struct FreeFamilyCertificate {
  bool certified = false;
  std::string failure; // first violated condition, when !certified
  PairRepr base;
  std::vector<Rational> family;
  int max_syllables = 3;
  struct NonIso {
    std::string left, right;
  };
  std::vector<NonIso> checked; // every verified non-isomorphism
  struct SpotReduction {
    std::string word;   // e.g. "z(1) z(2)^-1"
    int syllables = 0;
    int reduced_length = 0;
  };
  std::vector<SpotReduction> spot_reductions;
  std::string json() const;
  std::string text() const;
};

// Verifies the zeta-cycle and junction non-isomorphisms for every a in A and
// spot-reduces all freely reduced syllable sequences of length <= max_syllables.
// Each must reduce to exactly 4r - 2m letters (r syllables, m junctions where
// an inverse syllable precedes a positive one: the shared center-0 reversion
// pair cancels there) and in particular stay nonempty. 0 must be in A.
FreeFamilyCertificate certify_free_family(const PairRepr& base, std::vector<Rational> A,
                                          int max_syllables = 3, int jobs = 1);

struct LoopProfile {
  std::vector<int> loops; // loop lengths at the (stripped) base vertex
  int conjugator_length = 0;
  bool algebraic_shaped = false; // no loop, or a single loop of length <= 1
};

// Projects a closed word to its reversion edges and decomposes the resulting
// closed path: conjugator stripping, then loop splitting at the base vertex.
LoopProfile pi1_loop_profile(const BirWord& w);
std::string loop_profile_json(const LoopProfile& p);

} // namespace zz
