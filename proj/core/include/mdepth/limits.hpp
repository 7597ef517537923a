#pragma once

#include <cstddef>
#include <cstdint>

namespace mdepth {

/// Complexity guards. Every exhaustive search in the engine checks one of
/// these and raises ErrorKind::CapExceeded instead of running away.
struct Limits {
  /// Largest ambient variable count accepted by complex-based algorithms.
  std::size_t max_vertices = 24;
  /// Largest number of candidates an enumeration may visit (colon search,
  /// lcm lattice, multidegree scans).
  std::uint64_t search_cap = std::uint64_t{1} << 24;
};

}  // namespace mdepth
