#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mdepth/complex.hpp"
#include "mdepth/ring.hpp"

namespace mdepth {

struct MatrixEntry {
  std::size_t row;
  std::size_t col;
  std::int64_t value;
};

/// Integer matrix in coordinate form; at most one entry per cell.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<MatrixEntry> entries;
};

/// Exact rank by sparse row echelon: fraction-free with content reduction
/// over the rationals (int64 with overflow checks, GMP on overflow), modular
/// over a prime field.
std::size_t rank(const SparseMatrix& matrix, FieldSpec field);

namespace detail {
/// Bareiss elimination carried out in arbitrary precision from the start.
std::size_t rank_rational_bigint(const SparseMatrix& matrix);
/// Modular elimination with the general prime-field kernel (no GF(2) fast path).
std::size_t rank_mod_p_generic(const SparseMatrix& matrix, std::uint32_t p);
}  // namespace detail

/// ∂_i : C_i → C_{i-1} over the faces in canonical order (the empty face is
/// the only (-1)-face). The entry for τ \ {v} in column τ is (-1)^k, with k
/// the position of v in τ. Throws OutOfRange unless 0 ≤ i ≤ dim + 1; ∂_{dim+1}
/// has no columns.
SparseMatrix boundary_matrix(const SimplicialComplex& complex, int i, const Limits& limits = {});

/// Reduced Betti numbers dim_K H̃_i(Δ; K) for -1 ≤ i ≤ dim Δ.
class HomologyVector {
 public:
  HomologyVector() = default;
  explicit HomologyVector(std::vector<std::size_t> dims) : dims_(std::move(dims)) {}

  /// 0 outside [-1, top_degree()].
  std::size_t at(int i) const;
  int top_degree() const { return static_cast<int>(dims_.size()) - 2; }
  bool is_zero() const;
  const std::vector<std::size_t>& dims() const { return dims_; }

 private:
  std::vector<std::size_t> dims_;  // dims_[k] = H̃_{k-1}
};

HomologyVector reduced_homology(const SimplicialComplex& complex, FieldSpec field, const Limits& limits = {});
/// Same, truncated to degrees -1..max_degree; skips the boundary maps above.
HomologyVector reduced_homology_through(const SimplicialComplex& complex, FieldSpec field, int max_degree,
                                        const Limits& limits = {});

/// f_{-1}, f_0, ..., f_dim.
std::vector<std::size_t> f_vector(const SimplicialComplex& complex, const Limits& limits = {});

}  // namespace mdepth
