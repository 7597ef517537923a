#include "mdepth/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mdepth/decomposition.hpp"
#include "mdepth/error.hpp"
#include "mdepth/homology.hpp"

namespace mdepth {
namespace {

HochsterTable empty_table(std::size_t dim) {
  HochsterTable table;
  for (std::size_t i = 0; i <= dim; ++i) table.rows.push_back(CohomologyRow{i, false, true, {}, std::nullopt});
  return table;
}

void add_contributions(HochsterTable& table, Face support, const std::vector<std::uint32_t>& positive_part,
                       const HomologyVector& homology) {
  for (int j = -1; j <= homology.top_degree(); ++j) {
    const std::size_t d = homology.at(j);
    if (d == 0) continue;
    const auto i = static_cast<std::size_t>(j + static_cast<int>(support.size()) + 1);
    if (i >= table.rows.size()) raise(ErrorKind::Internal, "local cohomology above the Krull dimension");
    table.rows[i].contributions.push_back(CohomologyContribution{support, positive_part, j, d});
  }
}

void finish_rows(HochsterTable& table) {
  for (auto& row : table.rows) {
    row.nonzero = !row.contributions.empty();
    row.finite_length = std::all_of(row.contributions.begin(), row.contributions.end(),
                                    [](const CohomologyContribution& c) { return c.support.empty(); });
    if (row.finite_length) {
      std::size_t total = 0;
      for (const auto& c : row.contributions) total += c.dimension;
      row.k_dim = total;
    }
  }
}

std::size_t coheight_count(std::size_t n, PrimeSupport p) { return p.coheight(n); }

void require_squarefree(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) raise(ErrorKind::SquarefreeRequired, "operation needs a squarefree ideal");
}

/// The localization M_{p_F} as K[lk F] over the variables outside F.
LocalizationProfile localize(const ModuleProfile& global, const SimplicialComplex& complex, Face face,
                             const Limits& limits) {
  if (!complex.contains(face)) raise(ErrorKind::NotAFace, "the face prime is not in the support of the module");
  const SimplicialComplex lk = link(complex, face).compress(face);
  const RingDescriptor ring = global.ring.without(face);
  LocalizationProfile out{face, face.size(), profile(to_ideal(lk, ring), limits), false};

  out.contains_assd_prime = std::any_of(global.assd.begin(), global.assd.end(),
                                        [&](PrimeSupport q) { return !q.vars.intersects(face); });
  if (global.depth > out.profile.depth + out.face_size) {
    raise(ErrorKind::Internal, "depth inequality violated at a face of size " + std::to_string(out.face_size));
  }
  if (out.contains_assd_prime &&
      (global.depth != out.profile.depth + out.face_size || !out.profile.flags.maximal_depth)) {
    raise(ErrorKind::Internal, "localization at a prime over an Assd prime lost depth equality or maximal depth");
  }
  return out;
}

}  // namespace

std::optional<std::size_t> HochsterTable::min_nonzero() const {
  for (const auto& row : rows) {
    if (row.nonzero) return row.degree;
  }
  return std::nullopt;
}

std::optional<std::size_t> HochsterTable::max_nonzero() const {
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (it->nonzero) return it->degree;
  }
  return std::nullopt;
}

HochsterTable hochster_table(const SimplicialComplex& complex, FieldSpec field, const Limits& limits) {
  HochsterTable table = empty_table(krull_dim(complex));
  for (const auto& group : complex.faces_by_size(limits)) {
    for (Face sigma : group) {
      if (link_is_cone(complex, sigma)) continue;
      add_contributions(table, sigma, {}, reduced_homology(link(complex, sigma), field, limits));
    }
  }
  finish_rows(table);
  return table;
}

namespace {

/// Calls visit(G, a, complex) for each multidegree with negative support G in
/// `order` and exponents a < lcm on the rest, skipping void complexes and
/// cone points. `visit` returns false to skip the remaining multidegrees of
/// the current G.
template <typename Visit>
void for_each_multidegree(const MonomialIdeal& ideal, const std::vector<VertexSet>& order, const Limits& limits,
                          Visit&& visit) {
  const std::size_t n = ideal.num_vars();
  if (n > limits.max_vertices) {
    raise(ErrorKind::CapExceeded, "multidegree scan over " + std::to_string(n) + " variables exceeds the vertex cap");
  }
  const Monomial bound = ideal.exponent_lcm();
  const VertexSet ground = VertexSet::range(n);
  std::uint64_t visited = 0;
  for (VertexSet negative : order) {
    const auto free_vars = (ground - negative).elements();
    // a variable outside the support with a_j >= max exponent is a cone point
    if (std::any_of(free_vars.begin(), free_vars.end(), [&](std::size_t j) { return bound[j] == 0; })) continue;
    std::vector<std::uint32_t> a(n, 0);
    while (true) {
      if (++visited > limits.search_cap) raise(ErrorKind::CapExceeded, "multidegree scan exceeds the search cap");
      std::vector<VertexSet> nonfaces;
      for (std::size_t v : negative.elements()) nonfaces.push_back(VertexSet().with(v));
      for (const auto& g : ideal.gens()) {
        VertexSet exceed;
        for (std::size_t j : free_vars) {
          if (g[j] > a[j]) exceed = exceed.with(j);
        }
        nonfaces.push_back(exceed);
      }
      if (auto complex = complex_from_nonfaces(n, nonfaces, limits)) {
        if (!visit(negative, a, *complex)) break;
      }
      std::size_t k = 0;
      for (; k < free_vars.size(); ++k) {
        const std::size_t j = free_vars[k];
        if (a[j] + 1 < bound[j]) {
          ++a[j];
          break;
        }
        a[j] = 0;
      }
      if (k == free_vars.size()) break;
    }
  }
}

std::vector<VertexSet> subsets_by_size(std::size_t n) {
  std::vector<VertexSet> out;
  for (VertexSet::Mask bits = 0; bits < (VertexSet::Mask{1} << n); ++bits) out.emplace_back(bits);
  std::stable_sort(out.begin(), out.end(), [](VertexSet x, VertexSet y) { return x.size() < y.size(); });
  return out;
}

/// Multidegree pairs visited by the scan, saturating.
std::uint64_t multidegree_work(const MonomialIdeal& ideal) {
  std::uint64_t work = 1;
  for (std::uint32_t e : ideal.exponent_lcm().exponents()) {
    if (work > (std::uint64_t{1} << 62) / (e + 1)) return std::uint64_t{1} << 62;
    work *= e + 1;
  }
  return work;
}

}  // namespace

namespace detail {

HochsterTable multidegree_table(const MonomialIdeal& ideal, const Limits& limits) {
  require_proper(ideal);
  if (ideal.num_vars() > limits.max_vertices) {
    raise(ErrorKind::CapExceeded,
          "multidegree scan over " + std::to_string(ideal.num_vars()) + " variables exceeds the vertex cap");
  }
  HochsterTable table = empty_table(krull_dim(ideal));
  const FieldSpec field = ideal.ring().field();
  for_each_multidegree(ideal, subsets_by_size(ideal.num_vars()), limits,
                       [&](VertexSet negative, const std::vector<std::uint32_t>& a, const SimplicialComplex& complex) {
                         const bool zero_part = std::all_of(a.begin(), a.end(), [](std::uint32_t e) { return e == 0; });
                         add_contributions(table, negative, zero_part ? std::vector<std::uint32_t>{} : a,
                                           reduced_homology(complex, field, limits));
                         return true;
                       });
  finish_rows(table);
  return table;
}

std::size_t multidegree_depth(const MonomialIdeal& ideal, const Limits& limits) {
  require_proper(ideal);
  const std::size_t n = ideal.num_vars();
  if (n > limits.max_vertices) {
    raise(ErrorKind::CapExceeded, "multidegree scan over " + std::to_string(n) + " variables exceeds the vertex cap");
  }
  // depth ≤ dim S/p for every minimal prime p
  std::size_t best = n;
  for (PrimeSupport p : minimal_primes(ideal)) best = std::min(best, coheight_count(n, p));
  const FieldSpec field = ideal.ring().field();
  for_each_multidegree(ideal, subsets_by_size(n), limits,
                       [&](VertexSet negative, const std::vector<std::uint32_t>&, const SimplicialComplex& complex) {
                         const std::size_t s = negative.size();
                         if (s >= best) return false;
                         const int top = static_cast<int>(best) - static_cast<int>(s) - 2;
                         const HomologyVector h = reduced_homology_through(complex, field, top, limits);
                         for (int j = -1; j <= top; ++j) {
                           if (h.at(j) != 0) {
                             best = static_cast<std::size_t>(j + 1) + s;
                             break;
                           }
                         }
                         return s < best;
                       });
  return best;
}

std::size_t depth_by_polarization(const MonomialIdeal& ideal, const Limits& limits) {
  require_proper(ideal);
  const Polarization pol = polarize(ideal);
  return depth(from_squarefree_ideal(pol.ideal, limits), ideal.ring().field(), limits) - pol.added_vars;
}

}  // namespace detail

HochsterTable hochster_table(const MonomialIdeal& ideal, const Limits& limits) {
  require_proper(ideal);
  if (ideal.is_squarefree()) {
    return hochster_table(from_squarefree_ideal(ideal, limits), ideal.ring().field(), limits);
  }
  return detail::multidegree_table(ideal, limits);
}

std::size_t krull_dim(const MonomialIdeal& ideal) {
  std::size_t best = 0;
  for (PrimeSupport p : minimal_primes(ideal)) best = std::max(best, coheight_count(ideal.num_vars(), p));
  return best;
}

std::size_t krull_dim(const SimplicialComplex& complex) { return static_cast<std::size_t>(complex.dim() + 1); }

std::size_t depth(const SimplicialComplex& complex, FieldSpec field, const Limits& limits) {
  // depth ≤ dim S/p_F = |F| for every facet F, so only faces and homology
  // degrees that could beat the current bound are visited
  std::size_t best = complex.ground_size();
  for (Face f : complex.facets()) best = std::min(best, f.size());
  const auto faces = complex.faces_by_size(limits);
  for (std::size_t s = 0; s < faces.size() && s < best; ++s) {
    for (Face sigma : faces[s]) {
      if (s >= best) break;
      if (link_is_cone(complex, sigma)) continue;
      const int top = static_cast<int>(best) - static_cast<int>(s) - 2;
      const HomologyVector h = reduced_homology_through(link(complex, sigma), field, top, limits);
      for (int j = -1; j <= top; ++j) {
        if (h.at(j) != 0) {
          best = static_cast<std::size_t>(j + 1) + s;
          break;
        }
      }
    }
  }
  return best;
}

std::size_t depth(const MonomialIdeal& ideal, const Limits& limits) {
  require_proper(ideal);
  if (ideal.is_squarefree()) {
    return depth(from_squarefree_ideal(ideal, limits), ideal.ring().field(), limits);
  }
  // Both routes are exact; take the one with less enumeration.
  std::size_t polarized_vars = 0;
  for (std::uint32_t e : ideal.exponent_lcm().exponents()) polarized_vars += std::max<std::uint32_t>(e, 1);
  if (polarized_vars < 62 && multidegree_work(ideal) > (std::uint64_t{1} << polarized_vars)) {
    return detail::depth_by_polarization(ideal, limits);
  }
  return detail::multidegree_depth(ideal, limits);
}

std::vector<std::size_t> betti_numbers(const MonomialIdeal& ideal, const Limits& limits) {
  require_proper(ideal);
  std::vector<std::size_t> betti{1};
  if (ideal.is_zero()) return betti;
  const std::size_t n = ideal.num_vars();
  if (n > VertexSet::kCapacity) raise(ErrorKind::CapExceeded, "more than 64 variables");

  // lcm lattice: closure of the generators under lcm
  std::set<std::vector<std::uint32_t>> lattice;
  std::vector<Monomial> frontier;
  for (const auto& g : ideal.gens()) {
    lattice.emplace(g.exponents().begin(), g.exponents().end());
    frontier.push_back(g);
  }
  while (!frontier.empty()) {
    std::vector<Monomial> next;
    for (const auto& x : frontier) {
      for (const auto& g : ideal.gens()) {
        Monomial y = lcm(x, g);
        if (lattice.emplace(y.exponents().begin(), y.exponents().end()).second) {
          if (lattice.size() > limits.search_cap) raise(ErrorKind::CapExceeded, "lcm lattice exceeds the search cap");
          next.push_back(std::move(y));
        }
      }
    }
    frontier = std::move(next);
  }

  for (const auto& exps : lattice) {
    const Monomial b(exps);
    std::vector<Face> facets;
    for (const auto& g : ideal.gens()) {
      if (!g.divides(b)) continue;
      Face room;
      for (std::size_t j = 0; j < n; ++j) {
        if (g[j] < b[j]) room = room.with(j);
      }
      facets.push_back(room);
    }
    const HomologyVector h = reduced_homology(SimplicialComplex(n, std::move(facets)), ideal.ring().field(), limits);
    for (int j = -1; j <= h.top_degree(); ++j) {
      if (h.at(j) == 0) continue;
      const auto degree = static_cast<std::size_t>(j + 2);
      if (betti.size() <= degree) betti.resize(degree + 1, 0);
      betti[degree] += h.at(j);
    }
  }
  return betti;
}

std::size_t projdim(const MonomialIdeal& ideal, const Limits& limits) {
  const auto betti = betti_numbers(ideal, limits);
  std::size_t top = 0;
  for (std::size_t i = 0; i < betti.size(); ++i) {
    if (betti[i] != 0) top = i;
  }
  return top;
}

std::size_t mdepth(const MonomialIdeal& ideal, const Limits& limits) {
  const auto ass = associated_primes(ideal, limits);
  std::size_t best = ideal.num_vars();
  for (PrimeSupport p : ass) best = std::min(best, coheight_count(ideal.num_vars(), p));
  return best;
}

std::optional<ReisnerWitness> reisner_witness(const SimplicialComplex& complex, FieldSpec field,
                                              const Limits& limits) {
  for (const auto& group : complex.faces_by_size(limits)) {
    for (Face sigma : group) {
      if (link_is_cone(complex, sigma)) continue;
      const SimplicialComplex lk = link(complex, sigma);
      const HomologyVector h = reduced_homology_through(lk, field, lk.dim() - 1, limits);
      for (int j = -1; j < lk.dim(); ++j) {
        if (h.at(j) != 0) return ReisnerWitness{sigma, j};
      }
    }
  }
  return std::nullopt;
}

bool is_cohen_macaulay(const SimplicialComplex& complex, FieldSpec field, const Limits& limits) {
  return !reisner_witness(complex, field, limits).has_value();
}

ModuleProfile profile(const MonomialIdeal& ideal, const Limits& limits) {
  require_proper(ideal);
  const std::size_t n = ideal.num_vars();
  ModuleProfile out{ideal.ring(), {ideal}, 0, 0, 0, {}, {}, {}, {}};
  out.dim = krull_dim(ideal);
  out.hochster = hochster_table(ideal, limits);
  out.depth = depth(ideal, limits);
  if (out.hochster.min_nonzero() != out.depth || out.hochster.max_nonzero() != out.dim) {
    raise(ErrorKind::Internal, "local cohomology table disagrees with depth or dimension");
  }
  out.ass = associated_primes(ideal, limits);
  out.mdepth = n;
  for (PrimeSupport p : out.ass) out.mdepth = std::min(out.mdepth, coheight_count(n, p));
  for (PrimeSupport p : out.ass) {
    if (coheight_count(n, p) == out.depth) out.assd.push_back(p);
  }
  out.flags.maximal_depth = out.depth == out.mdepth;
  out.flags.cohen_macaulay = out.depth == out.dim;
  out.flags.unmixed = std::all_of(out.ass.begin(), out.ass.end(),
                                  [&](PrimeSupport p) { return coheight_count(n, p) == out.dim; });
  out.flags.generalized_cm = std::all_of(out.hochster.rows.begin(), out.hochster.rows.end(),
                                         [&](const CohomologyRow& row) {
                                           return row.degree >= out.dim || row.finite_length;
                                         });
  return out;
}

LocalizationProfile localization_profile(const MonomialIdeal& ideal, Face face, const Limits& limits) {
  require_squarefree(ideal);
  const ModuleProfile global = profile(ideal, limits);
  return localize(global, from_squarefree_ideal(ideal, limits), face, limits);
}

std::size_t check_localization_oracles(const MonomialIdeal& ideal, const Limits& limits) {
  require_squarefree(ideal);
  const ModuleProfile global = profile(ideal, limits);
  const SimplicialComplex complex = from_squarefree_ideal(ideal, limits);
  std::size_t checked = 0;
  for (const auto& group : complex.faces_by_size(limits)) {
    for (Face face : group) {
      localize(global, complex, face, limits);
      ++checked;
    }
  }
  return checked;
}

ModuleProfile direct_sum_profile(std::span<const ModuleProfile> summands) {
  if (summands.empty()) raise(ErrorKind::EmptyInput, "direct sum of no modules");
  const RingDescriptor& ring = summands.front().ring;
  const std::size_t n = ring.size();
  ModuleProfile out{ring, {}, 0, summands.front().depth, n, {}, {}, {}, {}};
  std::set<PrimeSupport> ass;
  for (const auto& s : summands) {
    if (!(s.ring == ring)) raise(ErrorKind::RingMismatch, "direct summands over different rings");
    out.summands.insert(out.summands.end(), s.summands.begin(), s.summands.end());
    out.dim = std::max(out.dim, s.dim);
    out.depth = std::min(out.depth, s.depth);
    ass.insert(s.ass.begin(), s.ass.end());
  }
  out.ass.assign(ass.begin(), ass.end());
  for (PrimeSupport p : out.ass) {
    out.mdepth = std::min(out.mdepth, coheight_count(n, p));
    if (coheight_count(n, p) == out.depth) out.assd.push_back(p);
  }
  out.flags.maximal_depth = !out.assd.empty();
  out.flags.cohen_macaulay = out.depth == out.dim;
  out.flags.unmixed = std::all_of(out.ass.begin(), out.ass.end(),
                                  [&](PrimeSupport p) { return coheight_count(n, p) == out.dim; });

  out.hochster = empty_table(out.dim);
  for (const auto& s : summands) {
    for (const auto& row : s.hochster.rows) {
      auto& target = out.hochster.rows[row.degree].contributions;
      target.insert(target.end(), row.contributions.begin(), row.contributions.end());
    }
  }
  finish_rows(out.hochster);
  out.flags.generalized_cm = std::all_of(out.hochster.rows.begin(), out.hochster.rows.end(),
                                         [&](const CohomologyRow& row) {
                                           return row.degree >= out.dim || row.finite_length;
                                         });
  return out;
}

bool direct_sum_rule(std::span<const ModuleProfile> summands) {
  if (summands.empty()) raise(ErrorKind::EmptyInput, "direct sum of no modules");
  std::size_t lowest = summands.front().depth;
  for (const auto& s : summands) lowest = std::min(lowest, s.depth);
  return std::any_of(summands.begin(), summands.end(),
                     [&](const ModuleProfile& s) { return s.depth == lowest && s.flags.maximal_depth; });
}

}  // namespace mdepth
