#pragma once

#include "zz/graph.hpp"
#include "zz/words.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zz {

// Diag(S): diagonal automorphisms (ax, cy, ...) determined by a in the scale
// stabilizer of P and c = a^{r0+1}/delta for delta in the scale stabilizer
// of Q.
struct DiagDescription {
  int r0 = 0;
  bool trivial = false;       // only (1,1)
  bool one_parameter = false; // infinite family (monomial stabilizer involved)
  std::vector<std::pair<Rational, Rational>> elements; // (a, c), finite case
  std::string text;
};

struct Theorem1Check {
  bool p_two_distinct_roots = false;
  bool q_two_distinct_roots = false;
  bool p_nonzero_at_0 = false;
  bool pass = false;
};
Theorem1Check theorem1_check(const Poly& P, const Poly& Q);

struct AutReport {
  enum class Shape { AmalgamAJy, AmalgamJyJv, TypeIHuge };
  Shape shape{};
  CaseTag case_tag{};
  std::string product;     // "Z/2 * Ga^infty", "Ga^infty * Ga^infty", amalgam or huge text
  DiagDescription diag;    // case III
  std::string jy_description;
  std::string jv_description; // case III non-loop branch
  AutPairDescription pair_group;
  std::optional<Theorem1Check> theorem1;            // case I/II
  std::optional<FreeFamilyCertificate> certificate; // case I/II, when hypothesis holds
  bool pivoted = false;               // case II: certificate ran on [Q,P]
  std::optional<Rational> repair_shift; // Q replaced by P(w+t) before certifying
  std::string notes;

  std::string json() const;
  std::string text() const;
};

// Case III: amalgam branch by classify_type_iii, with free-product degeneration
// when Diag(S) is trivial. Case I/II: huge-type report with a free-family
// certificate over `family` (hypothesis permitting; case II pivots to [Q,P]).
AutReport aut_structure(const PairRepr& r, std::vector<Rational> family = {},
                        int jobs = 1);

} // namespace zz
