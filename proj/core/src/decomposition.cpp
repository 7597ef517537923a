#include "mdepth/decomposition.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "mdepth/complex.hpp"
#include "mdepth/error.hpp"

namespace mdepth {
namespace {

bool ideal_less(const MonomialIdeal& a, const MonomialIdeal& b) {
  return std::lexicographical_compare(a.gens().begin(), a.gens().end(), b.gens().begin(), b.gens().end(),
                                      graded_lex_less);
}

/// A generator that is neither 1 nor a pure power of a variable.
const Monomial* first_mixed_generator(const MonomialIdeal& ideal) {
  for (const auto& g : ideal.gens()) {
    if (!g.is_one() && !g.pure_power_variable()) return &g;
  }
  return nullptr;
}

void split_into_irreducibles(const MonomialIdeal& ideal, std::vector<MonomialIdeal>& out) {
  const Monomial* mixed = first_mixed_generator(ideal);
  if (mixed == nullptr) {
    out.push_back(ideal);
    return;
  }
  const std::size_t n = ideal.num_vars();
  std::size_t var = 0;
  while ((*mixed)[var] == 0) ++var;
  const Monomial power = Monomial::variable(n, var, (*mixed)[var]);
  const Monomial rest = *mixed / power;
  split_into_irreducibles(sum(ideal, MonomialIdeal(ideal.ring(), {power})), out);
  split_into_irreducibles(sum(ideal, MonomialIdeal(ideal.ring(), {rest})), out);
}

std::uint64_t colon_search_size(const Monomial& bound, std::uint64_t cap) {
  std::uint64_t count = 1;
  for (auto e : bound.exponents()) {
    if (count > cap / (std::uint64_t{e} + 1)) return cap + 1;
    count *= std::uint64_t{e} + 1;
  }
  return count;
}

}  // namespace

std::vector<PrimeSupport> associated_primes(const MonomialIdeal& ideal, const Limits& limits) {
  require_proper(ideal);
  const std::size_t n = ideal.num_vars();
  if (n > VertexSet::kCapacity) raise(ErrorKind::CapExceeded, "more than 64 variables");
  const Monomial bound = ideal.exponent_lcm();
  const std::uint64_t space = colon_search_size(bound, limits.search_cap);
  if (space > limits.search_cap) {
    raise(ErrorKind::CapExceeded, "colon search space exceeds " + std::to_string(limits.search_cap) + " monomials");
  }

  std::set<PrimeSupport> found;
  std::vector<Monomial::Exponent> exps(n, 0);
  for (std::uint64_t step = 0; step < space; ++step) {
    const Monomial u(exps);
    if (!ideal.contains(u)) {
      const MonomialIdeal quotient = colon(ideal, u);
      if (quotient.is_prime()) {
        VertexSet vars;
        for (const auto& g : quotient.gens()) vars = vars | g.support();
        found.insert(PrimeSupport{vars});
      }
    }
    // mixed-radix increment bounded by the lcm exponents
    for (std::size_t i = 0; i < n; ++i) {
      if (exps[i] < bound[i]) {
        ++exps[i];
        break;
      }
      exps[i] = 0;
    }
  }
  return {found.begin(), found.end()};
}

std::vector<PrimeSupport> minimal_primes(const MonomialIdeal& ideal) {
  require_proper(ideal);
  std::vector<VertexSet> supports;
  supports.reserve(ideal.gens().size());
  for (const auto& g : ideal.gens()) supports.push_back(g.support());
  std::vector<PrimeSupport> out;
  for (VertexSet cover : minimal_transversals(supports)) out.push_back(PrimeSupport{cover});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal) {
  require_proper(ideal);
  std::vector<MonomialIdeal> leaves;
  split_into_irreducibles(ideal, leaves);
  std::sort(leaves.begin(), leaves.end(), ideal_less);
  leaves.erase(std::unique(leaves.begin(), leaves.end()), leaves.end());

  std::vector<MonomialIdeal> out;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < leaves.size() && !redundant; ++j) {
      redundant = j != i && leaves[i].contains(leaves[j]);
    }
    if (!redundant) out.push_back(leaves[i]);
  }
  return out;
}

std::vector<PrimaryComponent> primary_decomposition(const MonomialIdeal& ideal) {
  std::map<PrimeSupport, MonomialIdeal> groups;
  for (const auto& component : irreducible_decomposition(ideal)) {
    VertexSet vars;
    for (const auto& g : component.gens()) vars = vars | g.support();
    const PrimeSupport p{vars};
    auto it = groups.find(p);
    if (it == groups.end()) {
      groups.emplace(p, component);
    } else {
      it->second = intersect(it->second, component);
    }
  }
  std::vector<PrimaryComponent> out;
  for (auto& [p, component] : groups) out.push_back(PrimaryComponent{p, component});
  return out;
}

Polarization polarize(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.num_vars();
  const Monomial bound = ideal.exponent_lcm();
  const RingDescriptor& ring = ideal.ring();

  // index of x_{i,j} for j >= 2
  std::vector<std::vector<std::size_t>> extra(n);
  std::vector<std::string> names = ring.names();
  std::unordered_set<std::string> taken(names.begin(), names.end());
  std::vector<std::size_t> origin(n);
  for (std::size_t i = 0; i < n; ++i) origin[i] = i;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 2; j <= bound[i]; ++j) {
      std::string name = ring.name(i) + "_" + std::to_string(j);
      while (taken.count(name) != 0) name += "'";
      taken.insert(name);
      extra[i].push_back(names.size());
      names.push_back(name);
      origin.push_back(i);
    }
  }
  const std::size_t total = names.size();
  RingDescriptor polarized_ring(std::move(names), ring.field());

  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens()) {
    std::vector<Monomial::Exponent> exps(total, 0);
    for (std::size_t i = 0; i < n; ++i) {
      if (g[i] == 0) continue;
      exps[i] = 1;
      for (std::uint32_t j = 2; j <= g[i]; ++j) exps[extra[i][j - 2]] = 1;
    }
    gens.emplace_back(std::move(exps));
  }
  return Polarization{MonomialIdeal(std::move(polarized_ring), std::move(gens)), total - n, std::move(origin)};
}

MonomialIdeal depolarize(const Polarization& polarization, const RingDescriptor& original) {
  const std::size_t n = original.size();
  std::vector<Monomial> gens;
  for (const auto& g : polarization.ideal.gens()) {
    std::vector<Monomial::Exponent> exps(n, 0);
    for (std::size_t k = 0; k < g.size(); ++k) exps.at(polarization.origin[k]) += g[k];
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(original, std::move(gens));
}

MonomialIdeal tensor_join(const MonomialIdeal& left, const MonomialIdeal& right) {
  require_proper(left);
  require_proper(right);
  if (!(left.ring().field() == right.ring().field())) {
    raise(ErrorKind::RingMismatch, "tensor factors over different fields");
  }
  const std::size_t n = left.num_vars();
  const std::size_t m = right.num_vars();
  std::vector<Monomial> gens;
  for (const auto& g : left.gens()) {
    std::vector<Monomial::Exponent> exps(g.exponents().begin(), g.exponents().end());
    exps.resize(n + m, 0);
    gens.emplace_back(std::move(exps));
  }
  for (const auto& g : right.gens()) {
    std::vector<Monomial::Exponent> exps(n, 0);
    exps.insert(exps.end(), g.exponents().begin(), g.exponents().end());
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(RingDescriptor::standard(n + m, left.ring().field()), std::move(gens));
}

MonomialIdeal quotient_by_variable(const MonomialIdeal& ideal, std::size_t v, const Limits& limits) {
  require_proper(ideal);
  const std::size_t n = ideal.num_vars();
  if (v >= n) raise(ErrorKind::OutOfRange, "variable index " + std::to_string(v + 1) + " outside the ring");
  const bool zerodivisor =
      std::any_of(ideal.gens().begin(), ideal.gens().end(), [&](const Monomial& g) { return g[v] > 0; });
  if (zerodivisor) {
    for (PrimeSupport p : associated_primes(ideal, limits)) {
      if (p.vars.contains(v)) {
        std::string vars;
        for (std::size_t k : p.vars.elements()) vars += (vars.empty() ? "" : ",") + ideal.ring().name(k);
        raise(ErrorKind::RegularityViolation,
              ideal.ring().name(v) + " is a zerodivisor: it lies in the associated prime (" + vars + ")");
      }
    }
    raise(ErrorKind::Internal, "zerodivisor without a witness associated prime");
  }
  std::vector<Monomial> gens;
  for (const auto& g : ideal.gens()) {
    std::vector<Monomial::Exponent> exps;
    for (std::size_t i = 0; i < n; ++i) {
      if (i != v) exps.push_back(g[i]);
    }
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(ideal.ring().without(VertexSet().with(v)), std::move(gens));
}

}  // namespace mdepth
