#include <benchmark/benchmark.h>

#include "mdepth/homology.hpp"
#include "mdepth/random.hpp"

using namespace mdepth;

namespace {

/// The complex of all k-subsets of n vertices.
SimplicialComplex skeleton_of_simplex(std::size_t n, std::size_t k) {
  std::vector<Face> facets;
  for (VertexSet::Mask m = 0; m < (VertexSet::Mask{1} << n); ++m) {
    if (static_cast<std::size_t>(__builtin_popcountll(m)) == k) facets.emplace_back(m);
  }
  return SimplicialComplex(n, std::move(facets));
}

FieldSpec field_of(std::int64_t code) { return code == 0 ? FieldSpec::rationals() : FieldSpec::prime(static_cast<std::uint32_t>(code)); }

}  // namespace

static void BM_BoundaryRank(benchmark::State& state) {
  const auto complex = skeleton_of_simplex(static_cast<std::size_t>(state.range(0)), 4);
  const auto matrix = boundary_matrix(complex, 3);
  const FieldSpec field = field_of(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(rank(matrix, field));
  state.counters["rows"] = static_cast<double>(matrix.rows);
  state.counters["cols"] = static_cast<double>(matrix.cols);
}
BENCHMARK(BM_BoundaryRank)->ArgsProduct({{8, 10, 12}, {0, 2, 3}})->Unit(benchmark::kMillisecond);

static void BM_BoundaryRankBigint(benchmark::State& state) {
  const auto matrix = boundary_matrix(skeleton_of_simplex(static_cast<std::size_t>(state.range(0)), 4), 3);
  for (auto _ : state) benchmark::DoNotOptimize(detail::rank_rational_bigint(matrix));
}
BENCHMARK(BM_BoundaryRankBigint)->DenseRange(8, 10)->Unit(benchmark::kMillisecond);

static void BM_ReducedHomologyRandom(benchmark::State& state) {
  InstanceGenerator gen(7);
  std::vector<SimplicialComplex> complexes;
  for (int i = 0; i < 32; ++i) complexes.push_back(gen.complex(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) {
    for (const auto& c : complexes) benchmark::DoNotOptimize(reduced_homology(c, FieldSpec::rationals()));
  }
}
BENCHMARK(BM_ReducedHomologyRandom)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);
