#include "zz/zigzag.hpp"

#include "zz/errors.hpp"

#include <algorithm>

namespace zz {

bool validate_standard_type(const ZigzagType& z) {
    if (z.size() < 2) return false;
    if (z[0] != 0 || z[1] != -1) return false;
    for (size_t i = 2; i < z.size(); ++i)
        if (z[i] > -2) return false;
    return true;
}

ZigzagType reversed_type(const ZigzagType& z) {
    if (!validate_standard_type(z)) throw domain_error("reversed_type: not a standard type");
    ZigzagType out(z);
    std::reverse(out.begin() + 2, out.end());
    return out;
}

MoveTrace reversion_trace(const ZigzagType& z) {
    if (!validate_standard_type(z)) throw domain_error("reversion_trace: not a standard type");
    MoveTrace trace;
    trace.input = z;
    ZigzagType d(z);
    std::reverse(d.begin(), d.end());
    trace.input_display = d;

    const int r = static_cast<int>(z.size()) - 2;

    // theta_0 contracts the final (-1)-curve into its 0-neighbour and then
    // blows up between the two leftover components, moving the 0 inward.
    size_t n = d.size();
    if (n == 2) {
        d = {0, -1};
    } else {
        d[n - 3] += 1;
        d[n - 2] = 0;
        d[n - 1] = -1;
    }
    trace.steps.push_back({"theta_0", d});

    int j = r; // index of the 0-curve in the display
    for (int i = 1; i <= r; ++i) {
        // phi_i pivots the fibration across the 0-curve: its neighbours trade
        // places while everything else stays put.
        std::swap(d[static_cast<size_t>(j - 1)], d[static_cast<size_t>(j + 1)]);
        trace.steps.push_back({"phi_" + std::to_string(i), d});

        // theta_i contracts the fiber component right of the 0-curve and
        // blows up on its left, shifting the (0,-1) pattern one step left.
        if (j >= 2) {
            d[static_cast<size_t>(j - 2)] += 1;
            d[static_cast<size_t>(j - 1)] = 0;
            d[static_cast<size_t>(j)] = -1;
            d[static_cast<size_t>(j + 1)] -= 1;
            j -= 1;
        } else {
            d[0] = 0;
            d[1] = -1;
            d[2] -= 1;
            j = 0;
        }
        trace.steps.push_back({"theta_" + std::to_string(i), d});
    }

    trace.final_type = d;
    return trace;
}

} // namespace zz
