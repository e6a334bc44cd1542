#pragma once

#include "zz/pair.hpp"

#include <random>
#include <vector>

// Deterministic random generators shared by the unit and acceptance suites.
namespace zztest {

inline zz::Rational small_rational(std::mt19937& gen, int num_range = 6, int den_range = 3) {
    std::uniform_int_distribution<int> num(-num_range, num_range);
    std::uniform_int_distribution<int> den(1, den_range);
    return zz::Rational(num(gen), den(gen));
}

inline zz::Rational small_nonzero(std::mt19937& gen, int num_range = 6, int den_range = 3) {
    for (;;) {
        zz::Rational r = small_rational(gen, num_range, den_range);
        if (r != 0) return r;
    }
}

// Degree exactly `deg`, all coefficients below `vanishing` zero and the
// coefficient at `vanishing` nonzero.
inline zz::Poly random_poly(std::mt19937& gen, int deg, int vanishing = 0) {
    std::vector<zz::Rational> c(static_cast<size_t>(deg) + 1);
    for (int i = vanishing; i < deg; ++i) c[static_cast<size_t>(i)] = small_rational(gen);
    c[static_cast<size_t>(vanishing)] = small_nonzero(gen);
    c[static_cast<size_t>(deg)] = small_nonzero(gen);
    if (deg == vanishing) c[static_cast<size_t>(deg)] = small_nonzero(gen);
    return zz::Poly(std::move(c));
}

// A random pair with both slots nonvanishing at 0 (case I).
inline zz::PairRepr random_case_i_pair(std::mt19937& gen, int max_deg = 4) {
    std::uniform_int_distribution<int> d(1, max_deg);
    return zz::PairRepr::make(random_poly(gen, d(gen), 0), random_poly(gen, d(gen), 0));
}

} // namespace zztest
