#include <benchmark/benchmark.h>

#include "negbin/statistics.hpp"
#include "negbin/sweep.hpp"

namespace {

void BM_ClosedStats(benchmark::State& state) {
  const negbin::NBSParams p{static_cast<int>(state.range(0)), 0.6, 0.3, 2.0};
  for (auto _ : state) benchmark::DoNotOptimize(negbin::closed_stats(p));
}
BENCHMARK(BM_ClosedStats)->Arg(1)->Arg(30);

void BM_OracleStats(benchmark::State& state) {
  const negbin::NBSParams p{static_cast<int>(state.range(0)), 0.6, 0.3, 2.0};
  const auto v = negbin::superposition(p);
  for (auto _ : state) benchmark::DoNotOptimize(negbin::oracle_stats(v));
}
BENCHMARK(BM_OracleStats)->Arg(1)->Arg(30);

void BM_ASeries(benchmark::State& state) {
  const double eta = static_cast<double>(state.range(0)) / 100.0;
  for (auto _ : state) benchmark::DoNotOptimize(negbin::a_pow_expectation(2, 1.0, eta, 0.0, 50));
}
BENCHMARK(BM_ASeries)->Arg(10)->Arg(90)->Arg(99);

void BM_Fig1Sweep(benchmark::State& state) {
  const auto cfg = negbin::fig1_defaults();
  for (auto _ : state) benchmark::DoNotOptimize(negbin::sweep_mandel_q(cfg));
}
BENCHMARK(BM_Fig1Sweep)->Unit(benchmark::kMillisecond);

}  // namespace
