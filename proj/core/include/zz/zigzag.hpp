#pragma once

#include <string>
#include <vector>

namespace zz {

// Self-intersection sequence of a boundary zigzag, ordered B_0, B_1, ..., B_r.
using ZigzagType = std::vector<int>;

// Standard form: (0,-1) or (0,-1,-a_1,...,-a_r) with all a_i >= 2.
bool validate_standard_type(const ZigzagType& z);

// One elementary move; `resulting` is the boundary in displayed orientation
// (reversed standard order), matching the contraction/blow-up figures.
struct MoveStep {
  std::string label; // "theta_0", "phi_1", "theta_1", ...
  ZigzagType resulting;
};

struct MoveTrace {
  ZigzagType input;         // standard orientation
  ZigzagType input_display; // reversed, the starting display
  std::vector<MoveStep> steps;
  ZigzagType final_type;    // standard orientation: (0,-1,-a_r,...,-a_1)
};

// Trace the elementary-move sequence of one reversion: theta_0, then
// (phi_i, theta_i) for i = 1..r. Errors on non-standard input.
MoveTrace reversion_trace(const ZigzagType& z);

// (0,-1,-a_1,...,-a_r) -> (0,-1,-a_r,...,-a_1)
ZigzagType reversed_type(const ZigzagType& z);

} // namespace zz
