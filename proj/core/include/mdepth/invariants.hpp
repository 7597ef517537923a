#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mdepth/complex.hpp"
#include "mdepth/ideal.hpp"
#include "mdepth/limits.hpp"

namespace mdepth {

/// One graded piece of H^i_m(S/I) as the reduced homology of a complex.
/// `support` is the set of variables with negative exponent in the
/// multidegree (the face σ in the squarefree case), `positive_part` the
/// exponents of the remaining variables (all zero in the squarefree case),
/// and i = homology_degree + |support| + 1.
struct CohomologyContribution {
  Face support;
  std::vector<std::uint32_t> positive_part;
  int homology_degree = 0;
  std::size_t dimension = 0;
};

struct CohomologyRow {
  std::size_t degree = 0;
  bool nonzero = false;
  /// H^i has finite length iff every contribution has empty support.
  bool finite_length = true;
  /// Positive contributions only.
  std::vector<CohomologyContribution> contributions;
  /// K-dimension of H^i, present iff finite_length.
  std::optional<std::size_t> k_dim;
};

/// Nonvanishing and finite-length data of H^i_m(M) for 0 ≤ i ≤ dim M.
struct HochsterTable {
  std::vector<CohomologyRow> rows;

  std::optional<std::size_t> min_nonzero() const;
  std::optional<std::size_t> max_nonzero() const;
};

/// Hochster's formula on a complex: H^i_m(K[Δ]) collects H̃_{i-|σ|-1}(lk σ)
/// over the faces σ of Δ.
HochsterTable hochster_table(const SimplicialComplex& complex, FieldSpec field, const Limits& limits = {});

/// Table of H^i_m(S/I) for any proper monomial ideal. Squarefree ideals use
/// the link scan above; general ideals scan the multidegrees a with
/// a_j < max exponent of x_j (negative coordinates collapsed into the
/// support), each contributing the homology of the complex
/// {F ⊆ [n]∖G : x^{a+} ∉ I S_{x_{F∪G}}}, G the negative support of a.
HochsterTable hochster_table(const MonomialIdeal& ideal, const Limits& limits = {});

namespace detail {
/// The multidegree scan, also on squarefree input.
HochsterTable multidegree_table(const MonomialIdeal& ideal, const Limits& limits = {});
/// Least nonvanishing degree of the multidegree scan, pruned like the link
/// scan.
std::size_t multidegree_depth(const MonomialIdeal& ideal, const Limits& limits = {});
/// depth of the polarization minus the number of added variables.
std::size_t depth_by_polarization(const MonomialIdeal& ideal, const Limits& limits = {});
}  // namespace detail

/// dim S/I. Throws UndefinedModule for the unit ideal.
std::size_t krull_dim(const MonomialIdeal& ideal);
std::size_t krull_dim(const SimplicialComplex& complex);

/// Least i with H^i_m(K[Δ]) ≠ 0.
std::size_t depth(const SimplicialComplex& complex, FieldSpec field, const Limits& limits = {});
/// depth S/I over the ring's field. Non-squarefree ideals take the
/// multidegree scan or the polarization, whichever enumerates less.
std::size_t depth(const MonomialIdeal& ideal, const Limits& limits = {});

/// Total Betti numbers β_0, β_1, ... of S/I from the lcm lattice: for each
/// lattice element b, β_{i+1,b}(S/I) = dim H̃_{i-1}(K^b) with K^b the upper
/// Koszul complex {F ⊆ supp b : x^b / x^F ∈ I}.
std::vector<std::size_t> betti_numbers(const MonomialIdeal& ideal, const Limits& limits = {});
/// Projective dimension of S/I over S.
std::size_t projdim(const MonomialIdeal& ideal, const Limits& limits = {});

/// min over Ass(S/I) of dim S/p.
std::size_t mdepth(const MonomialIdeal& ideal, const Limits& limits = {});

/// A face σ with H̃_j(lk σ) ≠ 0 for some j < dim lk σ: an obstruction to
/// Cohen–Macaulayness.
struct ReisnerWitness {
  Face face;
  int homology_degree = 0;
};

std::optional<ReisnerWitness> reisner_witness(const SimplicialComplex& complex, FieldSpec field,
                                              const Limits& limits = {});
bool is_cohen_macaulay(const SimplicialComplex& complex, FieldSpec field, const Limits& limits = {});

struct ModuleFlags {
  bool maximal_depth = false;
  bool cohen_macaulay = false;
  bool unmixed = false;
  bool generalized_cm = false;
};

/// Invariants of S/I, or of a formal direct sum of such modules.
struct ModuleProfile {
  RingDescriptor ring;
  /// One ideal per cyclic summand S/I.
  std::vector<MonomialIdeal> summands;
  std::size_t dim = 0;
  std::size_t depth = 0;
  std::size_t mdepth = 0;
  std::vector<PrimeSupport> ass;
  std::vector<PrimeSupport> assd;
  ModuleFlags flags;
  HochsterTable hochster;

  FieldSpec field() const { return ring.field(); }
};

ModuleProfile profile(const MonomialIdeal& ideal, const Limits& limits = {});

/// The localization of K[Δ] at the face prime p_F, realized as K[lk F] in the
/// variables outside F; dim R/p_F = |F|.
struct LocalizationProfile {
  Face face;
  std::size_t face_size = 0;
  ModuleProfile profile;
  /// Whether p_F contains an element of Assd(M).
  bool contains_assd_prime = false;
};

/// Throws SquarefreeRequired, NotAFace, and Internal when the depth
/// inequality depth M ≤ depth M_p + dim R/p fails or, for p_F containing
/// some Assd prime, equality or the maximal-depth property of M_p fails.
LocalizationProfile localization_profile(const MonomialIdeal& ideal, Face face, const Limits& limits = {});

/// Checks both localization oracles at every face; returns the number of
/// faces checked and throws Internal on the first violation.
std::size_t check_localization_oracles(const MonomialIdeal& ideal, const Limits& limits = {});

/// Formal direct sum: Ass is the union, depth the minimum, dim the maximum,
/// and maximal depth decided from the union Ass. Throws EmptyInput and
/// RingMismatch.
ModuleProfile direct_sum_profile(std::span<const ModuleProfile> summands);

/// The summand criterion: the sum has maximal depth iff some summand of
/// minimal depth has maximal depth.
bool direct_sum_rule(std::span<const ModuleProfile> summands);

}  // namespace mdepth
