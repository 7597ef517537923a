#include <benchmark/benchmark.h>

#include "mdepth/filtration.hpp"
#include "mdepth/invariants.hpp"
#include "mdepth/io.hpp"
#include "mdepth/random.hpp"

using namespace mdepth;

static void BM_DepthCycle(benchmark::State& state) {
  const auto ideal = cycle_ideal(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(depth(ideal));
}
BENCHMARK(BM_DepthCycle)->DenseRange(6, 16, 2)->Unit(benchmark::kMillisecond);

static void BM_ProjdimCycle(benchmark::State& state) {
  const auto ideal = cycle_ideal(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(projdim(ideal));
}
BENCHMARK(BM_ProjdimCycle)->DenseRange(5, 10)->Unit(benchmark::kMillisecond);

static void BM_ProfileCycle(benchmark::State& state) {
  const auto ideal = cycle_ideal(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(profile(ideal));
}
BENCHMARK(BM_ProfileCycle)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_FiltrationCycle(benchmark::State& state) {
  const auto ideal = cycle_ideal(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(dimension_filtration(ideal));
}
BENCHMARK(BM_FiltrationCycle)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_DepthNonSquarefree(benchmark::State& state) {
  InstanceGenerator gen(42);
  std::vector<MonomialIdeal> ideals;
  for (int i = 0; i < 16; ++i) ideals.push_back(gen.monomial_ideal(static_cast<std::size_t>(state.range(0)), 3, 5));
  for (auto _ : state) {
    for (const auto& ideal : ideals) benchmark::DoNotOptimize(depth(ideal));
  }
}
BENCHMARK(BM_DepthNonSquarefree)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);
