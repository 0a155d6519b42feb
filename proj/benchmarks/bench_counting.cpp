#include <benchmark/benchmark.h>

#include "altseq/counting.hpp"

static void BM_BuildATable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto t = altseq::build_a_table(n);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_BuildATable)->Arg(25)->Arg(50)->Arg(100);

static void BM_BClosedRow(benchmark::State& state) {
    const long n = state.range(0);
    for (auto _ : state)
        for (long k = 1; k <= n; ++k) benchmark::DoNotOptimize(altseq::b_closed(k, n));
}
BENCHMARK(BM_BClosedRow)->Arg(30)->Arg(60);

static void BM_EulerNumbers(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(altseq::euler_numbers(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EulerNumbers)->Arg(100)->Arg(400);
