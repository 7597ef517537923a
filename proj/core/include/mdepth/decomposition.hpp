#pragma once

#include <cstddef>
#include <vector>

#include "mdepth/ideal.hpp"
#include "mdepth/limits.hpp"

namespace mdepth {

/// Associated primes of S/I, by exhaustive colon search over the monomials u
/// dividing the lcm of the generators: p is associated iff p = (I : u) for
/// some such u. Sorted canonically. Throws UndefinedModule for the unit
/// ideal and CapExceeded when the search space exceeds `limits.search_cap`.
std::vector<PrimeSupport> associated_primes(const MonomialIdeal& ideal, const Limits& limits = {});

/// Minimal primes of I (the minimal vertex covers of the generator supports).
std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& ideal);

/// Irredundant decomposition into ideals generated by pure variable powers,
/// sorted canonically.
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal);

struct PrimaryComponent {
  PrimeSupport radical;
  MonomialIdeal ideal;
};

/// Reduced primary decomposition obtained by grouping irreducible components
/// that share a radical. Ordered by radical.
std::vector<PrimaryComponent> primary_decomposition(const MonomialIdeal& ideal);

struct Polarization {
  MonomialIdeal ideal;
  std::size_t added_vars = 0;
  /// For every variable of the polarized ring, the original variable it
  /// specializes to.
  std::vector<std::size_t> origin;
};

/// x_i^k ↦ x_{i,1}···x_{i,k}. The variable x_{i,1} keeps index i; the new
/// variables x_{i,j}, j ≥ 2, are appended in order of (i, j).
Polarization polarize(const MonomialIdeal& ideal);

/// Inverse of polarize: substitute every polarized variable by its origin.
MonomialIdeal depolarize(const Polarization& polarization, const RingDescriptor& original);

/// I ⊗ J in S ⊗ T: variables of T renumbered after those of S, ring named
/// x1..x(n+m). Fields must agree.
MonomialIdeal tensor_join(const MonomialIdeal& left, const MonomialIdeal& right);

/// The image of I + (x_v) in the ring without x_v. x_v must be a nonzerodivisor
/// on S/I; otherwise RegularityViolation naming an associated prime that
/// contains x_v.
MonomialIdeal quotient_by_variable(const MonomialIdeal& ideal, std::size_t v, const Limits& limits = {});

}  // namespace mdepth
