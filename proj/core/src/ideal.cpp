#include "mdepth/ideal.hpp"

#include <algorithm>

#include "mdepth/error.hpp"

namespace mdepth {

MonomialIdeal::MonomialIdeal(RingDescriptor ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
  const std::size_t n = ring_.size();
  for (const auto& g : gens) {
    if (g.size() != n) {
      raise(ErrorKind::MalformedInput, "monomial has " + std::to_string(g.size()) + " exponents, ring has " +
                                           std::to_string(n) + " variables");
    }
  }
  std::sort(gens.begin(), gens.end(), graded_lex_less);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // ascending degree: a divisor always precedes its multiples
  for (auto& g : gens) {
    const bool redundant =
        std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& kept) { return kept.divides(g); });
    if (!redundant) gens_.push_back(std::move(g));
  }
}

MonomialIdeal MonomialIdeal::zero(RingDescriptor ring) { return MonomialIdeal(std::move(ring), {}); }

MonomialIdeal MonomialIdeal::unit(RingDescriptor ring) {
  const std::size_t n = ring.size();
  return MonomialIdeal(std::move(ring), {Monomial::one(n)});
}

MonomialIdeal MonomialIdeal::prime(RingDescriptor ring, PrimeSupport p) {
  const std::size_t n = ring.size();
  std::vector<Monomial> gens;
  for (std::size_t v : p.vars.elements()) {
    if (v >= n) raise(ErrorKind::OutOfRange, "prime variable outside the ring");
    gens.push_back(Monomial::variable(n, v));
  }
  return MonomialIdeal(std::move(ring), std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

bool MonomialIdeal::is_prime() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.degree() == 1; });
}

bool MonomialIdeal::contains(const Monomial& u) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(u); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& g) { return contains(g); });
}

Monomial MonomialIdeal::exponent_lcm() const {
  Monomial out = Monomial::one(num_vars());
  for (const auto& g : gens_) out = lcm(out, g);
  return out;
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) { return a.ring_ == b.ring_ && a.gens_ == b.gens_; }

MonomialIdeal minimalize(const RingDescriptor& ring, std::vector<Monomial> gens) {
  return MonomialIdeal(ring, std::move(gens));
}

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(a.ring() == b.ring())) raise(ErrorKind::RingMismatch, "ideals live in different rings");
}

void require_proper(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) raise(ErrorKind::UndefinedModule, "the unit ideal defines the zero module");
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.gens().size() * b.gens().size());
  for (const auto& u : a.gens()) {
    for (const auto& v : b.gens()) gens.push_back(lcm(u, v));
  }
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens(a.gens().begin(), a.gens().end());
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.ring(), std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u) {
  if (u.size() != ideal.num_vars()) raise(ErrorKind::RingMismatch, "colon monomial has the wrong length");
  std::vector<Monomial> gens;
  gens.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens()) gens.push_back(g / gcd(g, u));
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

MonomialIdeal radical(const MonomialIdeal& ideal) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens()) {
    std::vector<Monomial::Exponent> exps(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) exps[i] = g[i] > 0 ? 1 : 0;
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(ideal.ring(), std::move(gens));
}

}  // namespace mdepth
