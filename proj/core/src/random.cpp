#include "mdepth/random.hpp"

#include <algorithm>
#include <numeric>

#include "mdepth/error.hpp"

namespace mdepth {

std::uint64_t InstanceGenerator::below(std::uint64_t bound) {
  // rejection sampling keeps the draw unbiased and platform-independent
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

std::size_t InstanceGenerator::between(std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(below(hi - lo + 1));
}

bool InstanceGenerator::chance(std::uint64_t numerator, std::uint64_t denominator) {
  return below(denominator) < numerator;
}

SimplicialComplex InstanceGenerator::complex(std::size_t n) {
  const std::size_t count = between(1, 2 * n);
  std::vector<Face> facets;
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t size = between(1, n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    Face f;
    for (std::size_t i = 0; i < size; ++i) {
      const std::size_t j = i + static_cast<std::size_t>(below(n - i));
      std::swap(order[i], order[j]);
      f = f.with(order[i]);
    }
    facets.push_back(f);
  }
  return SimplicialComplex(n, std::move(facets));
}

MonomialIdeal InstanceGenerator::squarefree_ideal(std::size_t n, FieldSpec field) {
  return to_ideal(complex(n), RingDescriptor::standard(n, field));
}

MonomialIdeal InstanceGenerator::monomial_ideal(std::size_t n, std::uint32_t max_exponent, std::size_t max_gens,
                                                FieldSpec field) {
  const std::size_t count = between(1, max_gens);
  std::vector<Monomial> gens;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<Monomial::Exponent> exps(n);
    for (auto& e : exps) e = static_cast<Monomial::Exponent>(below(max_exponent + 1));
    if (std::all_of(exps.begin(), exps.end(), [](auto e) { return e == 0; })) exps[below(n)] = 1;
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(RingDescriptor::standard(n, field), std::move(gens));
}

MonomialIdeal InstanceGenerator::edge_ideal(std::size_t n, std::uint64_t numerator, std::uint64_t denominator,
                                            FieldSpec field) {
  std::vector<Monomial> gens;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (chance(numerator, denominator)) gens.push_back(Monomial::squarefree(n, VertexSet().with(a).with(b)));
    }
  }
  return MonomialIdeal(RingDescriptor::standard(n, field), std::move(gens));
}

}  // namespace mdepth
