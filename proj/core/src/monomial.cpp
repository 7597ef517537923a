#include "mdepth/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "mdepth/error.hpp"

namespace mdepth {

Monomial Monomial::variable(std::size_t n, std::size_t i, Exponent power) {
  std::vector<Exponent> exps(n, 0);
  exps.at(i) = power;
  return Monomial(std::move(exps));
}

Monomial Monomial::squarefree(std::size_t n, VertexSet support) {
  std::vector<Exponent> exps(n, 0);
  for (std::size_t v : support.elements()) exps.at(v) = 1;
  return Monomial(std::move(exps));
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

VertexSet Monomial::support() const {
  VertexSet out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (i >= VertexSet::kCapacity) raise(ErrorKind::CapExceeded, "more than 64 variables in a support");
    out = out.with(i);
  }
  return out;
}

std::optional<std::size_t> Monomial::pure_power_variable() const {
  std::optional<std::size_t> var;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (var) return std::nullopt;
    var = i;
  }
  return var;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  std::vector<Exponent> exps(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) exps[i] = exps_[i] - divisor.exps_[i];
  return Monomial(std::move(exps));
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<Exponent> exps(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) exps[i] = exps_[i] + other.exps_[i];
  return Monomial(std::move(exps));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Exponent> exps(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) exps[i] = std::max(a[i], b[i]);
  return Monomial(std::move(exps));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Exponent> exps(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) exps[i] = std::min(a[i], b[i]);
  return Monomial(std::move(exps));
}

bool graded_lex_less(const Monomial& a, const Monomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  return std::lexicographical_compare(b.exponents().begin(), b.exponents().end(), a.exponents().begin(),
                                      a.exponents().end());
}

}  // namespace mdepth
