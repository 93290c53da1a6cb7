#include <benchmark/benchmark.h>

#include "amp/boarding.hpp"
#include "amp/enumerators.hpp"
#include "amp/moments.hpp"

using namespace amp;

static void BM_ClosedFormFk(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(closed_form_Fk(n, 3));
}
BENCHMARK(BM_ClosedFormFk)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

static void BM_ChainEnumerator(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(chain_enumerator_k1(n));
}
BENCHMARK(BM_ChainEnumerator)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

// Brute force grows like the number of seatings; n = 8 with k = 8 is 40320 leaves.
static void BM_Oracle(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    const auto k = static_cast<unsigned>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(oracle_weight_enumerator(ProcessConfig::make(n, k)));
}
BENCHMARK(BM_Oracle)->Args({8, 1})->Args({8, 3})->Args({8, 8})->Args({10, 2})->Unit(benchmark::kMillisecond);

static void BM_Pgf(benchmark::State& state) {
    const auto n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(pgf(n, 2));
}
BENCHMARK(BM_Pgf)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMicrosecond);

static void BM_MomentsFromPgf(benchmark::State& state) {
    const auto f = pgf(static_cast<unsigned>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(moments_from_pgf(f, 6));
}
BENCHMARK(BM_MomentsFromPgf)->RangeMultiplier(4)->Range(16, 256)->Unit(benchmark::kMicrosecond);

static void BM_Simulate(benchmark::State& state) {
    const auto cfg = ProcessConfig::make(static_cast<unsigned>(state.range(0)), 1);
    for (auto _ : state) benchmark::DoNotOptimize(simulate_wrong_counts(cfg, 10000, 1, 1));
    state.SetItemsProcessed(state.iterations() * 10000);
}
BENCHMARK(BM_Simulate)->Arg(10)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);
