#pragma once

#include "zz/pair.hpp"

#include <string>

namespace zz {

// The defining system of the affine surface of (P,Q) in A^4:
//   yu = x*P(x),  vx = u*Q(u),  yv = P(x)*Q(u).
struct EquationTriple {
  Poly yu_rhs; // x*P(x), univariate in x
  Poly vx_rhs; // u*Q(u), univariate in u
  Poly P, Q;   // yv right-hand side is the product P(x) * Q(u)

  // Fully expanded, monomials in degree-lex order (x before u), e.g.
  //   "yu = x^3 - x^2".
  std::string canonical_text() const;
  // Vanishing-order factored display, e.g. "yu = x^2(x-1)".
  std::string display_text() const;
  std::string json() const;
};

EquationTriple emit_equations(const PairRepr& r);

} // namespace zz
