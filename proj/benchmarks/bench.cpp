#include "zz/graph.hpp"
#include "zz/moduli.hpp"
#include "zz/words.hpp"
#include "zz/zigzag.hpp"

#include <benchmark/benchmark.h>

namespace {

zz::PairRepr base_pair() {
    using zz::Poly;
    const Poly p = Poly::monomial(zz::Rational(1), 2) - Poly::constant(2);
    const Poly q = Poly::monomial(zz::Rational(1), 2) - Poly::constant(3);
    return zz::PairRepr::make(p, q);
}

void bm_reversion_trace(benchmark::State& state) {
    const zz::ZigzagType type = {0, -1, -int(state.range(0)), -int(state.range(1))};
    for (auto _ : state) benchmark::DoNotOptimize(zz::reversion_trace(type));
}
BENCHMARK(bm_reversion_trace)->Args({2, 3})->Args({6, 6});

void bm_pairs_isomorphic(benchmark::State& state) {
    const zz::PairRepr a = base_pair();
    const zz::PairRepr b = zz::PairRepr::make(a.P.scaled_arg(zz::Rational(3)),
                                              a.Q.shifted_arg(zz::Rational(1, 2)));
    for (auto _ : state) benchmark::DoNotOptimize(zz::pairs_isomorphic(a, b));
}
BENCHMARK(bm_pairs_isomorphic);

void bm_zeta_reduce(benchmark::State& state) {
    const zz::BirWord za = zz::zeta_word(base_pair(), zz::Rational(1));
    const zz::BirWord zb = zz::zeta_word(base_pair(), zz::Rational(2));
    const zz::BirWord prod = zz::concat(za, zb);
    for (auto _ : state) benchmark::DoNotOptimize(zz::reduce_word(prod));
}
BENCHMARK(bm_zeta_reduce);

void bm_build_graph(benchmark::State& state) {
    const std::vector<zz::Rational> centers = {zz::Rational(0), zz::Rational(1), zz::Rational(2)};
    for (auto _ : state)
        benchmark::DoNotOptimize(zz::build_graph(base_pair(), centers, int(state.range(0))));
}
BENCHMARK(bm_build_graph)->Arg(1)->Arg(2);

} // namespace

BENCHMARK_MAIN();
