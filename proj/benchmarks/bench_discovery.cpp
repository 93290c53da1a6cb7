#include <benchmark/benchmark.h>

#include "amp/ansatz.hpp"
#include "amp/recurrence.hpp"

using namespace amp;

static void BM_GuessRecurrence(benchmark::State& state) {
    const auto k = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(guess_recurrence(k, k + 1, k + 1, k));
}
BENCHMARK(BM_GuessRecurrence)->DenseRange(1, 4)->Unit(benchmark::kMillisecond);

static void BM_VerifyRecurrence(benchmark::State& state) {
    const auto spec = builtin_recurrence(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(verify_recurrence(spec, spec.k, 50));
}
BENCHMARK(BM_VerifyRecurrence)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_FitMomentAnsatz(benchmark::State& state) {
    const auto r = static_cast<unsigned>(state.range(0));
    const auto data = moment_data(r, 2, 40);
    const auto spec = default_moment_ansatz(r);
    for (auto _ : state) benchmark::DoNotOptimize(fit_harmonic_ansatz(data, spec));
}
BENCHMARK(BM_FitMomentAnsatz)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);
