#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"
#include "mdepth/decomposition.hpp"
#include "mdepth/error.hpp"
#include "mdepth/filtration.hpp"
#include "mdepth/invariants.hpp"
#include "mdepth/random.hpp"
#include "oracles.hpp"

using namespace mdepth;
using testing_helpers::face;
using testing_helpers::ideal;

namespace {

MonomialIdeal skew_lines() { return ideal("x1*x3, x1*x4, x2*x3, x2*x4", 4); }

void expect_same_rows(const HochsterTable& a, const HochsterTable& b, const std::string& tag) {
  ASSERT_EQ(a.rows.size(), b.rows.size()) << tag;
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].nonzero, b.rows[i].nonzero) << tag << " H" << i;
    EXPECT_EQ(a.rows[i].finite_length, b.rows[i].finite_length) << tag << " H" << i;
    EXPECT_EQ(a.rows[i].k_dim, b.rows[i].k_dim) << tag << " H" << i;
  }
}

}  // namespace

TEST(KrullDim, Examples) {
  EXPECT_EQ(krull_dim(cycle_ideal(8)), 4u);
  EXPECT_EQ(krull_dim(skew_lines()), 2u);
  EXPECT_EQ(krull_dim(MonomialIdeal::zero(RingDescriptor::standard(5))), 5u);
  EXPECT_EQ(krull_dim(ideal("x1^3, x1*x2", 3)), 2u);
  EXPECT_THROW(krull_dim(MonomialIdeal::unit(RingDescriptor::standard(2))), Error);
}

TEST(Depth, Examples) {
  EXPECT_EQ(depth(cycle_ideal(8)), 3u);
  EXPECT_EQ(depth(skew_lines()), 1u);
  EXPECT_EQ(depth(ideal("x1, x2, x3", 3)), 0u);
  EXPECT_EQ(depth(MonomialIdeal::zero(RingDescriptor::standard(4))), 4u);
  EXPECT_EQ(depth(ideal("x1^2, x1*x2", 2)), 0u);
  EXPECT_EQ(depth(ideal("x1^2, x2^3", 3)), 1u);
  try {
    depth(MonomialIdeal::unit(RingDescriptor::standard(2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UndefinedModule);
  }
}

TEST(Depth, MatchesHochsterOracle) {
  InstanceGenerator gen(41);
  for (int k = 0; k < 80; ++k) {
    const std::size_t n = gen.between(1, 7);
    const auto i = gen.squarefree_ideal(n, k % 2 ? FieldSpec::prime(2) : FieldSpec::rationals());
    EXPECT_EQ(depth(i), oracle::squarefree_depth(i)) << format_ideal(i);
  }
}

TEST(Projdim, Examples) {
  EXPECT_EQ(projdim(ideal("x1*x2, x3*x4", 4)), 2u);
  EXPECT_EQ(projdim(cycle_ideal(8)), 5u);
  EXPECT_EQ(projdim(MonomialIdeal::zero(RingDescriptor::standard(3))), 0u);
  EXPECT_EQ(betti_numbers(ideal("x1*x2, x3*x4", 4)), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(betti_numbers(ideal("x1, x2, x3", 3)), (std::vector<std::size_t>{1, 3, 3, 1}));
}

TEST(Projdim, AuslanderBuchsbaumOnNonSquarefree) {
  InstanceGenerator gen(42);
  for (int k = 0; k < 150; ++k) {
    const std::size_t n = gen.between(1, 4);
    const auto i = gen.monomial_ideal(n, 3, 4);
    const std::size_t d = depth(i);
    EXPECT_EQ(d + projdim(i), n) << format_ideal(i);
    const auto table = hochster_table(i);
    EXPECT_EQ(table.min_nonzero(), d) << format_ideal(i);
    EXPECT_EQ(table.max_nonzero(), krull_dim(i)) << format_ideal(i);
  }
}

TEST(Depth, RoutesAgreeOnNonSquarefree) {
  InstanceGenerator gen(44);
  for (int k = 0; k < 120; ++k) {
    const std::size_t n = gen.between(1, 4);
    const auto i = gen.monomial_ideal(n, 3, 4);
    const std::size_t pruned = detail::multidegree_depth(i);
    EXPECT_EQ(pruned, detail::depth_by_polarization(i)) << format_ideal(i);
    EXPECT_EQ(pruned, detail::multidegree_table(i).min_nonzero()) << format_ideal(i);
    EXPECT_EQ(pruned, depth(i)) << format_ideal(i);
  }
}

TEST(HochsterTable, MultidegreeScanMatchesLinksOnSquarefree) {
  InstanceGenerator gen(43);
  for (int k = 0; k < 150; ++k) {
    const std::size_t n = gen.between(1, 8);
    const auto i = gen.squarefree_ideal(n);
    expect_same_rows(hochster_table(from_squarefree_ideal(i), i.ring().field()), detail::multidegree_table(i),
                     format_ideal(i));
  }
}

TEST(HochsterTable, ExtremesAreDepthAndDim) {
  InstanceGenerator gen(44);
  for (int k = 0; k < 100; ++k) {
    const auto i = gen.squarefree_ideal(gen.between(1, 8));
    const auto table = hochster_table(i);
    EXPECT_EQ(table.min_nonzero(), depth(i));
    EXPECT_EQ(table.max_nonzero(), krull_dim(i));
  }
}

TEST(Mdepth, Examples) {
  EXPECT_EQ(mdepth::mdepth(cycle_ideal(8)), 3u);
  EXPECT_EQ(mdepth::mdepth(skew_lines()), 2u);
  EXPECT_EQ(mdepth::mdepth(ideal("x1^2, x1*x2", 2)), 0u);
}

TEST(Profile, C8) {
  const auto p = profile(cycle_ideal(8));
  EXPECT_EQ(p.dim, 4u);
  EXPECT_EQ(p.depth, 3u);
  EXPECT_EQ(p.mdepth, 3u);
  EXPECT_TRUE(p.flags.maximal_depth);
  EXPECT_FALSE(p.flags.cohen_macaulay);
  EXPECT_FALSE(p.flags.unmixed);
  EXPECT_EQ(p.assd.size(), 8u);
  EXPECT_EQ(p.field(), FieldSpec::rationals());
}

TEST(Profile, SkewLines) {
  const auto p = profile(skew_lines());
  EXPECT_FALSE(p.flags.maximal_depth);
  EXPECT_TRUE(p.flags.generalized_cm);
  EXPECT_TRUE(p.flags.unmixed);
  EXPECT_TRUE(p.assd.empty());
  EXPECT_FALSE(p.hochster.rows[0].nonzero);
  EXPECT_TRUE(p.hochster.rows[1].finite_length);
  EXPECT_EQ(p.hochster.rows[1].k_dim, std::optional<std::size_t>(1));
  EXPECT_FALSE(p.hochster.rows[2].finite_length);
}

TEST(Profile, DepthZeroAlwaysMaximal) {
  InstanceGenerator gen(45);
  int seen = 0;
  for (int k = 0; k < 200; ++k) {
    const auto i = gen.monomial_ideal(gen.between(1, 4), 2, 4);
    const auto p = profile(i);
    if (p.depth != 0) continue;
    ++seen;
    EXPECT_TRUE(p.flags.maximal_depth) << format_ideal(i);
  }
  EXPECT_GT(seen, 0);
}

TEST(Profile, NonSquarefreeEmbeddedPrime) {
  const auto p = profile(ideal("x1^2, x1*x2", 2));
  EXPECT_EQ(p.ass.size(), 2u);
  EXPECT_EQ(p.depth, 0u);
  EXPECT_EQ(p.dim, 1u);
  EXPECT_TRUE(p.flags.maximal_depth);
  EXPECT_FALSE(p.flags.unmixed);
}

TEST(CohenMacaulay, ReisnerWitness) {
  EXPECT_TRUE(is_cohen_macaulay(testing_helpers::hollow_triangle(), FieldSpec::rationals()));
  const SimplicialComplex two_edges(4, {face({1, 2}), face({3, 4})});
  const auto w = reisner_witness(two_edges, FieldSpec::rationals());
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->face, Face());
  EXPECT_EQ(w->homology_degree, 0);
  EXPECT_TRUE(is_cohen_macaulay(testing_helpers::rp2(), FieldSpec::rationals()));
  EXPECT_FALSE(is_cohen_macaulay(testing_helpers::rp2(), FieldSpec::prime(2)));
  EXPECT_TRUE(is_cohen_macaulay(testing_helpers::rp2(), FieldSpec::prime(3)));
}

TEST(Localization, Conventions) {
  const auto c8 = cycle_ideal(8);
  const auto whole = localization_profile(c8, Face());
  EXPECT_EQ(whole.profile.depth, 3u);
  EXPECT_EQ(whole.profile.dim, 4u);
  const auto at_facet = localization_profile(c8, face({2, 4, 6, 8}));
  EXPECT_EQ(at_facet.face_size, 4u);
  EXPECT_EQ(at_facet.profile.depth, 0u);
  EXPECT_EQ(at_facet.profile.dim, 0u);
  EXPECT_TRUE(at_facet.profile.flags.maximal_depth);
  try {
    localization_profile(c8, face({1, 2}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAFace);
  }
  try {
    localization_profile(ideal("x1^2", 2), Face());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SquarefreeRequired);
  }
  EXPECT_GT(check_localization_oracles(c8), 0u);
}

TEST(DirectSum, Rules) {
  const auto c5 = profile(cycle_ideal(5));
  const std::vector<ModuleProfile> single{c5};
  EXPECT_EQ(direct_sum_profile(single).depth, c5.depth);
  EXPECT_EQ(direct_sum_profile(single).flags.maximal_depth, c5.flags.maximal_depth);

  // CM summand of strictly smallest depth: depth 1 via (x1,...,x4) in 5 variables
  const auto cm = profile(ideal("x1, x2, x3, x4", 5));
  const auto other = profile(ideal("x1*x3, x1*x4, x2*x3, x2*x4", 5));
  const std::vector<ModuleProfile> with_cm{cm, other};
  EXPECT_TRUE(direct_sum_profile(with_cm).flags.maximal_depth);
  EXPECT_TRUE(direct_sum_rule(with_cm));

  // unique depth-minimal summand without maximal depth
  const auto bad = profile(ideal("x1*x3, x1*x4, x2*x3, x2*x4", 4));
  const auto deep = profile(ideal("x1", 4));
  const std::vector<ModuleProfile> without{bad, deep};
  EXPECT_FALSE(direct_sum_profile(without).flags.maximal_depth);
  EXPECT_FALSE(direct_sum_rule(without));

  EXPECT_THROW(direct_sum_profile(std::span<const ModuleProfile>{}), Error);
  const std::vector<ModuleProfile> mismatch{c5, bad};
  EXPECT_THROW(direct_sum_profile(mismatch), Error);
}

TEST(FiniteLength, TorusPlusPointHasFiniteLengthMiddleCohomology) {
  // isolated vertex 1 plus a 7-vertex torus: depth 1 comes from the point,
  // H~_1(torus) = K^2 sits in H^2 with empty support
  auto facets = testing_helpers::moebius_torus(1);
  facets.push_back(face({1}));
  const SimplicialComplex complex(8, facets);
  const auto i = to_ideal(complex, RingDescriptor::standard(8));
  const auto p = profile(i);
  EXPECT_EQ(p.depth, 1u);
  EXPECT_EQ(p.mdepth, 1u);
  EXPECT_TRUE(p.flags.maximal_depth);
  ASSERT_EQ(p.hochster.rows.size(), 4u);
  EXPECT_TRUE(p.hochster.rows[2].nonzero);
  EXPECT_TRUE(p.hochster.rows[2].finite_length);
  EXPECT_EQ(p.hochster.rows[2].k_dim, std::optional<std::size_t>(2));
  EXPECT_EQ(finite_length_nonvanishing_degrees(p), std::vector<std::size_t>{2});
  EXPECT_EQ(is_sequentially_cm(i).verdict, Verdict::No);
}
