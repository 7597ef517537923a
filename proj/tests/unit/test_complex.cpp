#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"
#include "mdepth/complex.hpp"
#include "mdepth/decomposition.hpp"
#include "mdepth/error.hpp"
#include "mdepth/random.hpp"
#include "oracles.hpp"

using namespace mdepth;
using testing_helpers::face;
using testing_helpers::ideal;

namespace {

std::vector<Face> sorted(std::vector<Face> v) {
  std::sort(v.begin(), v.end());
  return v;
}

SimplicialComplex c8_complex() { return from_squarefree_ideal(cycle_ideal(8)); }

}  // namespace

TEST(FromIdeal, C8IndependenceComplex) {
  const auto complex = c8_complex();
  EXPECT_EQ(complex.facets().size(), 10u);
  EXPECT_EQ(complex.dim(), 3);
  EXPECT_NE(std::find(complex.facets().begin(), complex.facets().end(), face({2, 4, 6, 8})), complex.facets().end());
  const auto large = std::count_if(complex.facets().begin(), complex.facets().end(), [](Face f) { return f.size() == 4; });
  EXPECT_EQ(large, 2);
}

TEST(FromIdeal, ZeroIdealIsSimplex) {
  EXPECT_EQ(from_squarefree_ideal(MonomialIdeal::zero(RingDescriptor::standard(4))), SimplicialComplex::simplex(4));
}

TEST(FromIdeal, MaximalIdealIsEmptyFace) {
  const auto complex = from_squarefree_ideal(ideal("x1, x2, x3", 3));
  EXPECT_EQ(complex, SimplicialComplex::empty_face(3));
  EXPECT_EQ(complex.dim(), -1);
}

TEST(FromIdeal, Errors) {
  try {
    from_squarefree_ideal(ideal("x1^2", 2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SquarefreeRequired);
  }
  try {
    from_squarefree_ideal(MonomialIdeal::unit(RingDescriptor::standard(2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UndefinedModule);
  }
  Limits small;
  small.max_vertices = 5;
  try {
    from_squarefree_ideal(cycle_ideal(8), small);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CapExceeded);
  }
}

TEST(FromIdeal, FacetsMatchSubsetOracle) {
  InstanceGenerator gen(21);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = gen.between(1, 9);
    const auto i = gen.monomial_ideal(n, 1, 6);
    EXPECT_EQ(sorted(from_squarefree_ideal(i).facets()), sorted(oracle::facets(i)));
  }
}

TEST(FromIdeal, FacetsAreComplementsOfMinimalTransversals) {
  InstanceGenerator gen(22);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = gen.between(1, 9);
    const auto i = gen.monomial_ideal(n, 1, 6);
    std::vector<VertexSet> edges;
    for (const auto& g : i.gens()) edges.push_back(g.support());
    std::vector<Face> expected;
    for (VertexSet t : minimal_transversals(edges)) expected.push_back(Face::range(n) - t);
    EXPECT_EQ(sorted(from_squarefree_ideal(i).facets()), sorted(expected));
  }
}

TEST(ToIdeal, Examples) {
  EXPECT_TRUE(to_ideal(SimplicialComplex::simplex(3), RingDescriptor::standard(3)).is_zero());
  EXPECT_EQ(to_ideal(testing_helpers::hollow_triangle(), RingDescriptor::standard(3)), ideal("x1*x2*x3", 3));
  EXPECT_EQ(to_ideal(c8_complex(), RingDescriptor::standard(8)), cycle_ideal(8));
  EXPECT_EQ(to_ideal(SimplicialComplex::empty_face(2), RingDescriptor::standard(2)), ideal("x1, x2", 2));
}

TEST(ToIdeal, RoundTrips) {
  InstanceGenerator gen(23);
  for (int k = 0; k < 200; ++k) {
    const std::size_t n = gen.between(1, 9);
    const auto complex = gen.complex(n);
    const auto i = to_ideal(complex, RingDescriptor::standard(n));
    EXPECT_EQ(from_squarefree_ideal(i), complex);
    EXPECT_EQ(to_ideal(from_squarefree_ideal(i), i.ring()), i);
  }
}

TEST(ComplexMinimalPrimes, Examples) {
  const auto c8 = minimal_primes(c8_complex());
  EXPECT_EQ(c8.size(), 10u);
  auto ass = associated_primes(cycle_ideal(8));
  std::sort(ass.begin(), ass.end());
  EXPECT_EQ(c8, ass);
  EXPECT_EQ(minimal_primes(SimplicialComplex::simplex(3)), std::vector<PrimeSupport>{PrimeSupport{}});
  EXPECT_EQ(minimal_primes(SimplicialComplex::empty_face(3)), std::vector<PrimeSupport>{PrimeSupport{Face::range(3)}});
}

TEST(ComplexMinimalPrimes, EqualAssociatedPrimes) {
  InstanceGenerator gen(24);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = gen.between(1, 8);
    const auto complex = gen.complex(n);
    auto ass = associated_primes(to_ideal(complex, RingDescriptor::standard(n)));
    std::sort(ass.begin(), ass.end());
    EXPECT_EQ(minimal_primes(complex), ass);
  }
}

TEST(Link, Examples) {
  const auto tri = testing_helpers::hollow_triangle();
  EXPECT_EQ(link(tri, Face()), tri);
  EXPECT_EQ(link(tri, face({1, 2})), SimplicialComplex::empty_face(3));
  EXPECT_EQ(link(tri, face({1})), SimplicialComplex(3, {face({2}), face({3})}));
  try {
    link(tri, face({1, 2, 3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAFace);
  }
}

TEST(Link, DimensionBound) {
  InstanceGenerator gen(25);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = gen.between(1, 8);
    const auto complex = gen.complex(n);
    for (Face f : oracle::faces(n, complex.facets())) {
      EXPECT_LE(link(complex, f).dim(), complex.dim() - static_cast<int>(f.size()));
    }
  }
}

TEST(PureSkeleton, Examples) {
  const SimplicialComplex mixed(4, {face({1, 2, 3}), face({3, 4})});
  EXPECT_EQ(pure_skeleton(mixed, 2), SimplicialComplex(4, {face({1, 2, 3})}));
  EXPECT_EQ(pure_skeleton(mixed, 0), SimplicialComplex(4, {face({1}), face({2}), face({3}), face({4})}));
  EXPECT_EQ(pure_skeleton(mixed, 1), SimplicialComplex(4, {face({1, 2}), face({1, 3}), face({2, 3}), face({3, 4})}));
  EXPECT_THROW(pure_skeleton(mixed, 3), Error);
  EXPECT_THROW(pure_skeleton(mixed, -2), Error);
}

TEST(PureSkeleton, C8TwoSkeleton) {
  const auto complex = c8_complex();
  const auto skeleton = pure_skeleton(complex, 2);
  std::vector<Face> triangles;
  for (Face f : oracle::faces(8, complex.facets())) {
    if (f.size() == 3) triangles.push_back(f);
  }
  EXPECT_EQ(sorted(skeleton.facets()), sorted(triangles));
}

TEST(FacetSubcomplex, Conventions) {
  const auto complex = c8_complex();
  EXPECT_EQ(facet_subcomplex_min_dim(complex, -1), complex);
  EXPECT_EQ(facet_subcomplex_min_dim(complex, 4), SimplicialComplex::empty_face(8));
  EXPECT_FALSE(has_facet_above(complex, 4));
  const auto top = facet_subcomplex_min_dim(complex, 3);
  EXPECT_EQ(sorted(top.facets()), sorted({face({2, 4, 6, 8}), face({1, 3, 5, 7})}));
}

TEST(FacetSubcomplex, MonotoneInLevel) {
  InstanceGenerator gen(26);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = gen.between(1, 8);
    const auto complex = gen.complex(n);
    for (int i = 0; i <= complex.dim() + 1; ++i) {
      const auto lower = facet_subcomplex_min_dim(complex, i - 1);
      const auto upper = facet_subcomplex_min_dim(complex, i);
      for (Face f : upper.facets()) EXPECT_TRUE(lower.contains(f));
    }
  }
}

TEST(ConeVertices, Examples) {
  const SimplicialComplex cone(4, {face({1, 2, 4}), face({2, 3, 4}), face({1, 3, 4})});
  EXPECT_EQ(cone_vertices(cone), face({4}));
  EXPECT_EQ(cone_vertices(testing_helpers::hollow_triangle()), Face());
  EXPECT_EQ(cone_vertices(SimplicialComplex::simplex(3)), Face::range(3));
}

TEST(Complex, Construction) {
  EXPECT_THROW(SimplicialComplex(3, {}), Error);
  EXPECT_THROW(SimplicialComplex(2, {face({3})}), Error);
  const SimplicialComplex redundant(3, {face({1}), face({1, 2})});
  EXPECT_EQ(redundant.facets().size(), 1u);
  EXPECT_TRUE(redundant.contains(Face()));
  EXPECT_FALSE(redundant.contains(face({3})));
}

TEST(Complex, FaceEnumerationCap) {
  Limits tight;
  tight.search_cap = 4;
  EXPECT_THROW(SimplicialComplex::simplex(6).faces_by_size(tight), Error);
}

TEST(MinimalTransversals, Basic) {
  EXPECT_EQ(minimal_transversals({}), std::vector<VertexSet>{VertexSet()});
  EXPECT_TRUE(minimal_transversals({VertexSet()}).empty());
  EXPECT_EQ(sorted(minimal_transversals({face({1, 2}), face({2, 3})})), sorted({face({2}), face({1, 3})}));
}
