#include <benchmark/benchmark.h>

#include <numbers>

#include "resonant/closed_form.hpp"
#include "resonant/minimizer.hpp"
#include "resonant/resonance.hpp"
#include "resonant/word.hpp"

using namespace resonant;

static void BM_MinLogCosTable(benchmark::State& state) {
  const auto budget = static_cast<std::uint64_t>(state.range(0));
  double theta = 0.731;
  for (auto _ : state) {
    MinLogCosTable table(theta, budget);
    benchmark::DoNotOptimize(table.value(budget));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MinLogCosTable)->RangeMultiplier(4)->Range(16, 4096)->Complexity(benchmark::oNSquared);

static void BM_FnGridSweep(benchmark::State& state) {
  const Params params(2.0, 0.5, 0.25);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    for (int i = 0; i < 64; ++i) {
      benchmark::DoNotOptimize(f_n(2.0 * std::numbers::pi * i / 64.0, n, params).log_f_n);
    }
  }
}
BENCHMARK(BM_FnGridSweep)->Arg(40)->Arg(400);

static void BM_ClosedFormNorm(benchmark::State& state) {
  const Word w{H(5), R(2), H(9), R(3), H(1), R(4), H(2)};
  double theta = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_form_norm(w, theta, 2.0));
    theta += 1e-3;
  }
}
BENCHMARK(BM_ClosedFormNorm);

static void BM_BruteForceFn(benchmark::State& state) {
  const Params params(2.0, 0.5, 0.5);
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_f_n(0.9, n, params).log_f_n);
}
BENCHMARK(BM_BruteForceFn)->DenseRange(4, 10, 2);

static void BM_MeasureBracket(benchmark::State& state) {
  const Params params(2.0, 0.5, 0.1);
  const auto truncation = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(resonant_measure_bracket(params, truncation).upper);
}
BENCHMARK(BM_MeasureBracket)->Arg(10)->Arg(50)->Arg(200);

static void BM_Certify(benchmark::State& state) {
  const Params params(2.0, 0.5, 0.5);
  double theta = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify(theta, params, 40));
    theta += 0.01;
  }
}
BENCHMARK(BM_Certify);

BENCHMARK_MAIN();
