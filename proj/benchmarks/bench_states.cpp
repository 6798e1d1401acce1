#include <benchmark/benchmark.h>

#include <cmath>

#include "negbin/generation.hpp"
#include "negbin/states.hpp"

namespace {

void BM_Superposition(benchmark::State& state) {
  const negbin::NBSParams p{static_cast<int>(state.range(0)), 0.6, 0.3, 1.0};
  for (auto _ : state) benchmark::DoNotOptimize(negbin::superposition(p));
}
BENCHMARK(BM_Superposition)->Arg(1)->Arg(30)->Arg(1000);

void BM_CatLimitState(benchmark::State& state) {
  const int M = static_cast<int>(state.range(0));
  const negbin::NBSParams p{M, std::sqrt(1.0 / M), 0.0, 3.141592653589793};
  for (auto _ : state) benchmark::DoNotOptimize(negbin::superposition(p));
}
BENCHMARK(BM_CatLimitState)->Arg(100)->Arg(10000);

void BM_DispersiveProtocol(benchmark::State& state) {
  const negbin::NBSParams p{5, 0.7, 0.4, 0.0};
  for (auto _ : state) benchmark::DoNotOptimize(negbin::dispersive_protocol(p, {1.0, 3.141592653589793, 0.5}));
}
BENCHMARK(BM_DispersiveProtocol);

}  // namespace
