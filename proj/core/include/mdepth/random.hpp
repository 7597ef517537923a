#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "mdepth/complex.hpp"
#include "mdepth/ideal.hpp"

namespace mdepth {

/// Seeded instance generator. Draws use the raw 64-bit engine output only, so
/// a seed produces the same instances on every platform.
class InstanceGenerator {
 public:
  explicit InstanceGenerator(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi);
  bool chance(std::uint64_t numerator, std::uint64_t denominator);

  /// A complex on n vertices with 1..2n random facets of random size.
  SimplicialComplex complex(std::size_t n);
  /// Stanley–Reisner ideal of `complex(n)`.
  MonomialIdeal squarefree_ideal(std::size_t n, FieldSpec field = FieldSpec::rationals());
  /// Random generators with exponents up to `max_exponent`; always proper.
  MonomialIdeal monomial_ideal(std::size_t n, std::uint32_t max_exponent, std::size_t max_gens,
                               FieldSpec field = FieldSpec::rationals());
  /// Edge ideal of a random graph with edge probability num/den.
  MonomialIdeal edge_ideal(std::size_t n, std::uint64_t numerator, std::uint64_t denominator,
                           FieldSpec field = FieldSpec::rationals());

 private:
  std::mt19937_64 engine_;
};

}  // namespace mdepth
