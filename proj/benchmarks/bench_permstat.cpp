#include <benchmark/benchmark.h>

#include "altseq/montecarlo.hpp"
#include "altseq/permstat.hpp"

using altseq::DescentWord;
using altseq::Pcg32;

static void BM_AsLen(benchmark::State& state) {
    Pcg32 rng({42, 0});
    auto w = altseq::random_permutation(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(altseq::as_len(w));
}
BENCHMARK(BM_AsLen)->Arg(1000)->Arg(10000);

static void BM_IsLen(benchmark::State& state) {
    Pcg32 rng({42, 1});
    auto w = altseq::random_permutation(static_cast<int>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(altseq::is_len(w));
}
BENCHMARK(BM_IsLen)->Arg(1000)->Arg(10000);

static void BM_LenSigma(benchmark::State& state) {
    Pcg32 rng({42, 2});
    auto w = altseq::random_permutation(static_cast<int>(state.range(0)), rng);
    auto sigma = DescentWord::parse("UUD");
    for (auto _ : state) benchmark::DoNotOptimize(altseq::len_sigma(w, sigma));
}
BENCHMARK(BM_LenSigma)->Arg(200)->Arg(500);

static void BM_Shuffle(benchmark::State& state) {
    Pcg32 rng({42, 3});
    for (auto _ : state)
        benchmark::DoNotOptimize(altseq::random_permutation(static_cast<int>(state.range(0)), rng));
}
BENCHMARK(BM_Shuffle)->Arg(2000);
