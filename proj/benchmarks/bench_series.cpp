#include <benchmark/benchmark.h>

#include "altseq/series_identities.hpp"

static void BM_ExpandB(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(altseq::expand_B(order, order));
}
BENCHMARK(BM_ExpandB)->Arg(8)->Arg(12)->Arg(16);

static void BM_SeriesMul(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    auto a = altseq::expand_B(order, order);
    auto b = altseq::expand_B_gessel(order, order);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMul)->Arg(8)->Arg(12)->Arg(16);

static void BM_SeriesSqrt(benchmark::State& state) {
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(altseq::rho_series(order, order));
}
BENCHMARK(BM_SeriesSqrt)->Arg(12)->Arg(24);
