#include "mdepth/homology.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <limits>
#include <numeric>

#include "mdepth/error.hpp"

namespace mdepth {
namespace {

struct Overflow {};

/// int64 arithmetic that reports overflow instead of wrapping.
struct CheckedInt {
  std::int64_t v = 0;

  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    CheckedInt out;
    if (__builtin_mul_overflow(a.v, b.v, &out.v)) throw Overflow{};
    return out;
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    CheckedInt out;
    if (__builtin_sub_overflow(a.v, b.v, &out.v)) throw Overflow{};
    return out;
  }
  friend CheckedInt operator/(CheckedInt a, CheckedInt b) { return CheckedInt{a.v / b.v}; }
  bool is_zero() const { return v == 0; }
  friend bool operator==(CheckedInt, CheckedInt) = default;
};

bool is_zero(const mpz_class& x) { return sgn(x) == 0; }
bool is_zero(const CheckedInt& x) { return x.is_zero(); }

template <typename T>
std::vector<std::vector<T>> densify(const SparseMatrix& m) {
  std::vector<std::vector<T>> a(m.rows, std::vector<T>(m.cols, T{0}));
  for (const auto& e : m.entries) a[e.row][e.col] = T{e.value};
  return a;
}

/// Fraction-free elimination; every intermediate entry is a minor of the
/// input, so each division by the previous pivot is exact.
template <typename T>
std::size_t bareiss_rank(std::vector<std::vector<T>> a, std::size_t rows, std::size_t cols) {
  T prev{1};
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(a[p][c])) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = T{0};
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

template <typename T>
using SparseRow = std::vector<std::pair<std::size_t, T>>;

CheckedInt abs_value(CheckedInt x) {
  if (x.v == std::numeric_limits<std::int64_t>::min()) throw Overflow{};
  return CheckedInt{x.v < 0 ? -x.v : x.v};
}
CheckedInt gcd_value(CheckedInt a, CheckedInt b) { return CheckedInt{std::gcd(abs_value(a).v, abs_value(b).v)}; }
mpz_class gcd_value(const mpz_class& a, const mpz_class& b) { return gcd(a, b); }

/// a·row − b·pivot with a, b the leading coefficients, divided by the content
/// of the result. Both rows lead at the same column, which cancels.
template <typename T>
SparseRow<T> combine(const SparseRow<T>& row, const SparseRow<T>& pivot) {
  const T a = pivot.front().second;
  const T b = row.front().second;
  SparseRow<T> out;
  std::size_t i = 1;
  std::size_t j = 1;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, a * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, T{0} - b * pivot[j].second);
      ++j;
    } else {
      T x = a * row[i].second - b * pivot[j].second;
      if (!is_zero(x)) out.emplace_back(row[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  if (out.empty()) return out;
  T content = out.front().second;
  for (const auto& [c, x] : out) content = gcd_value(content, x);
  if (!(content == T{1})) {
    for (auto& [c, x] : out) x = x / content;
  }
  return out;
}

/// Rows are reduced in order against the pivots found so far; a row's
/// first nonzero becomes its pivot. Fraction-free with content division.
template <typename T>
std::size_t echelon_rank(const SparseMatrix& m) {
  std::vector<SparseRow<T>> rows(m.rows);
  for (const auto& e : m.entries) {
    if (e.value != 0) rows[e.row].emplace_back(e.col, T{e.value});
  }
  std::vector<SparseRow<T>> pivots(m.cols);
  std::size_t rank = 0;
  for (auto& row : rows) {
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    while (!row.empty()) {
      auto& pivot = pivots[row.front().first];
      if (pivot.empty()) {
        pivot = std::move(row);
        ++rank;
        break;
      }
      row = combine(row, pivot);
    }
  }
  return rank;
}

std::size_t rank_rational(const SparseMatrix& m) {
  try {
    return echelon_rank<CheckedInt>(m);
  } catch (const Overflow&) {
    return echelon_rank<mpz_class>(m);
  }
}

std::uint64_t power_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return result;
}

std::size_t rank_mod_p(const SparseMatrix& m, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> a(m.rows, std::vector<std::uint64_t>(m.cols, 0));
  for (const auto& e : m.entries) {
    const auto mod = static_cast<std::int64_t>(p);
    a[e.row][e.col] = static_cast<std::uint64_t>(((e.value % mod) + mod) % mod);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t piv = r;
    while (piv < m.rows && a[piv][c] == 0) ++piv;
    if (piv == m.rows) continue;
    std::swap(a[piv], a[r]);
    const std::uint64_t inv = power_mod(a[r][c], p - 2, p);
    for (std::size_t j = c; j < m.cols; ++j) a[r][j] = a[r][j] * inv % p;
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      const std::uint64_t factor = a[i][c];
      if (factor == 0) continue;
      for (std::size_t j = c; j < m.cols; ++j) {
        a[i][j] = (a[i][j] + (p - factor) * a[r][j]) % p;
      }
    }
    ++r;
  }
  return r;
}

/// Sparse modular echelon form, pivots scaled to 1.
std::size_t rank_mod_p_sparse(const SparseMatrix& m, std::uint64_t p) {
  using Row = std::vector<std::pair<std::size_t, std::uint64_t>>;
  std::vector<Row> rows(m.rows);
  const auto mod = static_cast<std::int64_t>(p);
  for (const auto& e : m.entries) {
    const auto x = static_cast<std::uint64_t>(((e.value % mod) + mod) % mod);
    if (x != 0) rows[e.row].emplace_back(e.col, x);
  }
  std::vector<Row> pivots(m.cols);
  std::size_t rank = 0;
  for (auto& row : rows) {
    std::sort(row.begin(), row.end());
    while (!row.empty()) {
      auto& pivot = pivots[row.front().first];
      if (pivot.empty()) {
        const std::uint64_t inv = power_mod(row.front().second, p - 2, p);
        for (auto& [c, x] : row) x = x * inv % p;
        pivot = std::move(row);
        ++rank;
        break;
      }
      const std::uint64_t factor = row.front().second;
      Row out;
      std::size_t i = 1;
      std::size_t j = 1;
      while (i < row.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
          out.push_back(row[i++]);
        } else if (i == row.size() || pivot[j].first < row[i].first) {
          out.emplace_back(pivot[j].first, (p - factor) * pivot[j].second % p);
          ++j;
        } else {
          const std::uint64_t x = (row[i].second + (p - factor) * pivot[j].second) % p;
          if (x != 0) out.emplace_back(row[i].first, x);
          ++i;
          ++j;
        }
      }
      row = std::move(out);
    }
  }
  return rank;
}

// GF(2): rows packed into 64-bit words
std::size_t rank_mod_2(const SparseMatrix& m) {
  const std::size_t words = (m.cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> a(m.rows, std::vector<std::uint64_t>(words, 0));
  for (const auto& e : m.entries) {
    if (e.value % 2 != 0) a[e.row][e.col / 64] ^= std::uint64_t{1} << (e.col % 64);
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t piv = r;
    while (piv < m.rows && (a[piv][w] & bit) == 0) ++piv;
    if (piv == m.rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      if ((a[i][w] & bit) == 0) continue;
      for (std::size_t k = w; k < words; ++k) a[i][k] ^= a[r][k];
    }
    ++r;
  }
  return r;
}

SparseMatrix boundary_between(const std::vector<Face>& lower, const std::vector<Face>& upper) {
  SparseMatrix m;
  m.rows = lower.size();
  m.cols = upper.size();
  for (std::size_t col = 0; col < upper.size(); ++col) {
    const auto verts = upper[col].elements();
    for (std::size_t k = 0; k < verts.size(); ++k) {
      const Face facet = upper[col].without(verts[k]);
      const auto it = std::lower_bound(lower.begin(), lower.end(), facet);
      m.entries.push_back({static_cast<std::size_t>(it - lower.begin()), col, k % 2 == 0 ? 1 : -1});
    }
  }
  return m;
}

}  // namespace

std::size_t rank(const SparseMatrix& matrix, FieldSpec field) {
  if (matrix.rows == 0 || matrix.cols == 0) return 0;
  if (field.is_rational()) return rank_rational(matrix);
  if (field.characteristic == 2) return rank_mod_2(matrix);
  return rank_mod_p_sparse(matrix, field.characteristic);
}

namespace detail {

std::size_t rank_rational_bigint(const SparseMatrix& matrix) {
  if (matrix.rows == 0 || matrix.cols == 0) return 0;
  return bareiss_rank(densify<mpz_class>(matrix), matrix.rows, matrix.cols);
}

std::size_t rank_mod_p_generic(const SparseMatrix& matrix, std::uint32_t p) {
  if (matrix.rows == 0 || matrix.cols == 0) return 0;
  return rank_mod_p(matrix, p);
}

}  // namespace detail

SparseMatrix boundary_matrix(const SimplicialComplex& complex, int i, const Limits& limits) {
  const int top = complex.dim();
  if (i < -1 || i > top + 1) {
    raise(ErrorKind::OutOfRange, "boundary degree " + std::to_string(i) + " outside [-1, " +
                                     std::to_string(top + 1) + "]");
  }
  const auto faces = complex.faces_by_size(limits);
  // i-faces have i+1 vertices
  const auto at = [&](int size) -> const std::vector<Face>& {
    static const std::vector<Face> none;
    return size >= 0 && size < static_cast<int>(faces.size()) ? faces[static_cast<std::size_t>(size)] : none;
  };
  return boundary_between(at(i), at(i + 1));
}

std::size_t HomologyVector::at(int i) const {
  const int k = i + 1;
  if (k < 0 || k >= static_cast<int>(dims_.size())) return 0;
  return dims_[static_cast<std::size_t>(k)];
}

bool HomologyVector::is_zero() const {
  return std::all_of(dims_.begin(), dims_.end(), [](std::size_t d) { return d == 0; });
}

std::vector<std::size_t> f_vector(const SimplicialComplex& complex, const Limits& limits) {
  std::vector<std::size_t> out;
  for (const auto& group : complex.faces_by_size(limits)) out.push_back(group.size());
  return out;
}

HomologyVector reduced_homology(const SimplicialComplex& complex, FieldSpec field, const Limits& limits) {
  return reduced_homology_through(complex, field, complex.dim(), limits);
}

HomologyVector reduced_homology_through(const SimplicialComplex& complex, FieldSpec field, int max_degree,
                                        const Limits& limits) {
  auto faces = complex.faces_by_size(limits);
  // H̃_j needs faces of sizes j+1 and j+2
  const std::size_t wanted = static_cast<std::size_t>(std::max(max_degree + 3, 0));
  if (faces.size() > wanted) faces.resize(wanted);
  const std::size_t levels = std::min(faces.size(), static_cast<std::size_t>(std::max(max_degree + 2, 0)));
  // ranks[k] = rank of the map from size-k faces to size-(k-1) faces
  std::vector<std::size_t> ranks(levels + 1, 0);
  for (std::size_t k = 1; k <= levels && k < faces.size(); ++k) {
    ranks[k] = rank(boundary_between(faces[k - 1], faces[k]), field);
  }
  std::vector<std::size_t> dims(levels);
  for (std::size_t k = 0; k < levels; ++k) dims[k] = faces[k].size() - ranks[k] - ranks[k + 1];
  return HomologyVector(std::move(dims));
}

}  // namespace mdepth
