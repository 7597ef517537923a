#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace mdepth {

/// A subset of {0, ..., 63}, stored as a bitmask. Houses faces, facets,
/// supports of squarefree monomials and generator sets of monomial primes.
///
/// The ordering is canonical: smaller sets first, equal-sized sets compared
/// lexicographically on their sorted element lists.
class VertexSet {
 public:
  using Mask = std::uint64_t;
  static constexpr std::size_t kCapacity = 64;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask bits) : bits_(bits) {}

  static VertexSet of(std::initializer_list<std::size_t> vertices);
  static VertexSet of(const std::vector<std::size_t>& vertices);
  /// {0, ..., n-1}
  static constexpr VertexSet range(std::size_t n) {
    return VertexSet(n >= kCapacity ? ~Mask{0} : (Mask{1} << n) - 1);
  }

  constexpr Mask bits() const { return bits_; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t v) const { return v < kCapacity && ((bits_ >> v) & 1U); }
  constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

  constexpr VertexSet with(std::size_t v) const { return VertexSet(bits_ | (Mask{1} << v)); }
  constexpr VertexSet without(std::size_t v) const { return VertexSet(bits_ & ~(Mask{1} << v)); }

  /// Sorted ascending.
  std::vector<std::size_t> elements() const;

  constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
  constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr std::strong_ordering operator<=>(VertexSet a, VertexSet b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    if (a.bits_ == b.bits_) return std::strong_ordering::equal;
    // the set owning the lowest differing element comes first
    const Mask low = (a.bits_ ^ b.bits_) & (~(a.bits_ ^ b.bits_) + 1);
    return (a.bits_ & low) ? std::strong_ordering::less : std::strong_ordering::greater;
  }

 private:
  Mask bits_ = 0;
};

/// Keep only the inclusion-maximal sets; result in canonical order.
std::vector<VertexSet> maximal_sets(std::vector<VertexSet> sets);
/// Keep only the inclusion-minimal sets; result in canonical order.
std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets);

/// A face of a simplicial complex.
using Face = VertexSet;

/// A monomial prime ideal, identified with the set of variables generating
/// it. The empty set is the zero prime; the full variable set is the
/// homogeneous maximal ideal.
struct PrimeSupport {
  VertexSet vars;

  /// Krull dimension of S/p for S with `num_vars` variables.
  std::size_t coheight(std::size_t num_vars) const { return num_vars - vars.size(); }

  friend constexpr bool operator==(PrimeSupport, PrimeSupport) = default;
  friend constexpr auto operator<=>(PrimeSupport a, PrimeSupport b) { return a.vars <=> b.vars; }
};

}  // namespace mdepth
