#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mdepth/vertex_set.hpp"

namespace mdepth {

/// A monomial x^a of the ambient ring, stored as its exponent vector.
class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {}

  static Monomial one(std::size_t n) { return Monomial(std::vector<Exponent>(n, 0)); }
  static Monomial variable(std::size_t n, std::size_t i, Exponent power = 1);
  static Monomial squarefree(std::size_t n, VertexSet support);

  std::size_t size() const { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const { return exps_; }

  std::uint64_t degree() const;
  bool is_one() const;
  bool is_squarefree() const;
  bool divides(const Monomial& other) const;
  /// Variables with positive exponent. Requires size() <= 64.
  VertexSet support() const;
  /// The variable index if this is x_i^k with k >= 1.
  std::optional<std::size_t> pure_power_variable() const;

  /// Exact quotient; `divisor` must divide *this.
  Monomial operator/(const Monomial& divisor) const;
  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// Graded-lex order: lower total degree first; ties broken by the exponent
/// vector in descending lexicographic order, so x1 precedes x2.
bool graded_lex_less(const Monomial& a, const Monomial& b);

}  // namespace mdepth
