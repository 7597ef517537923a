#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"
#include "mdepth/error.hpp"
#include "mdepth/homology.hpp"
#include "mdepth/random.hpp"
#include "oracles.hpp"

using namespace mdepth;
using testing_helpers::face;

namespace {

SparseMatrix dense_to_sparse(const std::vector<std::vector<std::int64_t>>& rows) {
  SparseMatrix m;
  m.rows = rows.size();
  m.cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (rows[r][c] != 0) m.entries.push_back({r, c, rows[r][c]});
    }
  }
  return m;
}

std::vector<std::vector<std::int64_t>> random_matrix(InstanceGenerator& gen, std::int64_t spread) {
  const std::size_t r = gen.between(1, 8);
  const std::size_t c = gen.between(1, 8);
  std::vector<std::vector<std::int64_t>> m(r, std::vector<std::int64_t>(c, 0));
  for (auto& row : m) {
    for (auto& x : row) {
      if (gen.chance(1, 2)) x = static_cast<std::int64_t>(gen.below(2 * spread + 1)) - spread;
    }
  }
  // make some rows dependent
  if (r > 2 && gen.chance(1, 2)) {
    for (std::size_t j = 0; j < c; ++j) m[r - 1][j] = 3 * m[0][j] - 2 * m[1][j];
  }
  return m;
}

}  // namespace

TEST(BoundaryMatrix, AugmentationOfPoints) {
  const SimplicialComplex points(3, {face({1}), face({2}), face({3})});
  const auto d0 = boundary_matrix(points, 0);
  EXPECT_EQ(d0.rows, 1u);
  EXPECT_EQ(d0.cols, 3u);
  EXPECT_EQ(d0.entries.size(), 3u);
  for (const auto& e : d0.entries) EXPECT_EQ(e.value, 1);
}

TEST(BoundaryMatrix, HollowTriangle) {
  const auto d1 = boundary_matrix(testing_helpers::hollow_triangle(), 1);
  EXPECT_EQ(d1.rows, 3u);
  EXPECT_EQ(d1.cols, 3u);
  EXPECT_EQ(rank(d1, FieldSpec::rationals()), 2u);
  EXPECT_EQ(boundary_matrix(testing_helpers::hollow_triangle(), 2).cols, 0u);
}

TEST(BoundaryMatrix, RangeChecked) {
  try {
    boundary_matrix(testing_helpers::hollow_triangle(), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::OutOfRange);
  }
}

TEST(BoundaryMatrix, SquaresToZero) {
  InstanceGenerator gen(31);
  for (int k = 0; k < 100; ++k) {
    const auto complex = gen.complex(gen.between(1, 8));
    for (int i = 1; i <= complex.dim() + 1; ++i) EXPECT_TRUE(oracle::boundary_squares_to_zero(complex, i));
  }
}

TEST(Rank, TrivialCases) {
  SparseMatrix identity{5, 5, {}};
  for (std::size_t i = 0; i < 5; ++i) identity.entries.push_back({i, i, 1});
  EXPECT_EQ(rank(identity, FieldSpec::rationals()), 5u);
  EXPECT_EQ(rank(identity, FieldSpec::prime(2)), 5u);
  EXPECT_EQ(rank(SparseMatrix{4, 3, {}}, FieldSpec::rationals()), 0u);
  EXPECT_EQ(rank(SparseMatrix{0, 0, {}}, FieldSpec::prime(5)), 0u);
}

TEST(Rank, MatchesDenseOracle) {
  InstanceGenerator gen(32);
  for (int k = 0; k < 300; ++k) {
    const auto m = random_matrix(gen, 4);
    const auto sparse = dense_to_sparse(m);
    const std::size_t q = rank(sparse, FieldSpec::rationals());
    EXPECT_EQ(q, oracle::dense_rank(m, 0));
    EXPECT_EQ(detail::rank_rational_bigint(sparse), q);
    for (std::uint32_t p : {2u, 3u, 7u}) {
      const std::size_t rp = rank(sparse, FieldSpec::prime(p));
      EXPECT_EQ(rp, oracle::dense_rank(m, p));
      EXPECT_EQ(detail::rank_mod_p_generic(sparse, p), rp);
      EXPECT_LE(rp, q);
    }
  }
}

TEST(Rank, LargeEntriesTakeBigIntegerPath) {
  // entries near 2^62 overflow int64 Bareiss after one step
  const std::int64_t big = std::int64_t{1} << 62;
  const std::vector<std::vector<std::int64_t>> m = {{big, big - 1, 3}, {big - 1, big, 5}, {1, 2, big}};
  EXPECT_EQ(rank(dense_to_sparse(m), FieldSpec::rationals()), 3u);
  const std::vector<std::vector<std::int64_t>> singular = {{big, big - 1}, {big, big - 1}};
  EXPECT_EQ(rank(dense_to_sparse(singular), FieldSpec::rationals()), 1u);
}

TEST(Rank, PermutationInvariant) {
  InstanceGenerator gen(33);
  for (int k = 0; k < 100; ++k) {
    auto m = random_matrix(gen, 3);
    const std::size_t before = rank(dense_to_sparse(m), FieldSpec::rationals());
    std::reverse(m.begin(), m.end());
    const auto shift = static_cast<long>(gen.below(m.front().size()));
    for (auto& row : m) std::rotate(row.begin(), row.begin() + shift, row.end());
    EXPECT_EQ(rank(dense_to_sparse(m), FieldSpec::rationals()), before);
  }
}

TEST(ReducedHomology, Examples) {
  EXPECT_TRUE(reduced_homology(SimplicialComplex::simplex(4), FieldSpec::rationals()).is_zero());
  const auto circle = reduced_homology(testing_helpers::hollow_triangle(), FieldSpec::rationals());
  EXPECT_EQ(circle.at(1), 1u);
  EXPECT_EQ(circle.at(0), 0u);
  EXPECT_EQ(circle.at(-1), 0u);
  const auto point = reduced_homology(SimplicialComplex::empty_face(2), FieldSpec::rationals());
  EXPECT_EQ(point.at(-1), 1u);
}

TEST(ReducedHomology, ProjectivePlaneDependsOnField) {
  const auto rp2 = testing_helpers::rp2();
  const auto q = reduced_homology(rp2, FieldSpec::rationals());
  const auto f2 = reduced_homology(rp2, FieldSpec::prime(2));
  EXPECT_EQ(q.at(1), 0u);
  EXPECT_EQ(q.at(2), 0u);
  EXPECT_EQ(f2.at(1), 1u);
  EXPECT_EQ(f2.at(2), 1u);
}

TEST(ReducedHomology, ConesAreAcyclic) {
  InstanceGenerator gen(34);
  for (int k = 0; k < 60; ++k) {
    const std::size_t n = gen.between(1, 7);
    const auto base = gen.complex(n);
    std::vector<Face> facets;
    for (Face f : base.facets()) facets.push_back(f.with(n));
    EXPECT_TRUE(reduced_homology(SimplicialComplex(n + 1, facets), FieldSpec::rationals()).is_zero());
  }
}

TEST(ReducedHomology, EulerAndDenseOracle) {
  InstanceGenerator gen(35);
  for (int k = 0; k < 150; ++k) {
    const std::size_t n = gen.between(1, 8);
    const auto complex = gen.complex(n);
    for (std::uint32_t p : {0u, 2u, 5u}) {
      const auto h = reduced_homology(complex, p == 0 ? FieldSpec::rationals() : FieldSpec::prime(p));
      const auto f = f_vector(complex);
      long chi_f = 0;
      long chi_h = 0;
      for (std::size_t i = 0; i < f.size(); ++i) chi_f += (i % 2 ? 1L : -1L) * static_cast<long>(f[i]);
      for (std::size_t i = 0; i < h.dims().size(); ++i) chi_h += (i % 2 ? 1L : -1L) * static_cast<long>(h.dims()[i]);
      EXPECT_EQ(chi_f, chi_h);
      const auto expected = oracle::reduced_homology(n, oracle::faces(n, complex.facets()), p);
      for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_EQ(h.at(static_cast<int>(i) - 1), expected[i]);
    }
  }
}

TEST(FVector, Counts) {
  EXPECT_EQ(f_vector(testing_helpers::hollow_triangle()), (std::vector<std::size_t>{1, 3, 3}));
  EXPECT_EQ(f_vector(SimplicialComplex::empty_face(3)), (std::vector<std::size_t>{1}));
}
