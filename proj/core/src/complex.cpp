#include "mdepth/complex.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "mdepth/error.hpp"

namespace mdepth {
namespace {

void require_ground(std::size_t ground_size) {
  if (ground_size > VertexSet::kCapacity) {
    raise(ErrorKind::CapExceeded, "complexes support at most 64 vertices, got " + std::to_string(ground_size));
  }
}

/// Calls `visit` on every subset of `set`, the empty set included.
template <typename Visit>
void for_each_subset(VertexSet set, Visit&& visit) {
  const VertexSet::Mask full = set.bits();
  VertexSet::Mask sub = full;
  while (true) {
    visit(VertexSet(sub));
    if (sub == 0) break;
    sub = (sub - 1) & full;
  }
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t ground_size, std::vector<Face> facets) : ground_size_(ground_size) {
  require_ground(ground_size);
  if (facets.empty()) raise(ErrorKind::MalformedInput, "a simplicial complex needs at least one facet");
  const VertexSet ground = VertexSet::range(ground_size);
  for (Face f : facets) {
    if (!f.subset_of(ground)) raise(ErrorKind::MalformedInput, "facet leaves the ground set");
  }
  facets_ = maximal_sets(std::move(facets));
}

SimplicialComplex SimplicialComplex::simplex(std::size_t ground_size) {
  return SimplicialComplex(ground_size, {VertexSet::range(ground_size)});
}

SimplicialComplex SimplicialComplex::empty_face(std::size_t ground_size) {
  return SimplicialComplex(ground_size, {VertexSet{}});
}

VertexSet SimplicialComplex::vertices() const {
  VertexSet out;
  for (Face f : facets_) out = out | f;
  return out;
}

int SimplicialComplex::dim() const {
  std::size_t top = 0;
  for (Face f : facets_) top = std::max(top, f.size());
  return static_cast<int>(top) - 1;
}

bool SimplicialComplex::contains(Face face) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](Face f) { return face.subset_of(f); });
}

std::vector<std::vector<Face>> SimplicialComplex::faces_by_size(const Limits& limits) const {
  std::uint64_t bound = 0;
  for (Face f : facets_) {
    bound += std::uint64_t{1} << f.size();
    if (bound > limits.search_cap) raise(ErrorKind::CapExceeded, "face enumeration exceeds the search cap");
  }
  std::unordered_set<VertexSet::Mask> seen;
  std::vector<std::vector<Face>> out(static_cast<std::size_t>(dim() + 2));
  for (Face facet : facets_) {
    for_each_subset(facet, [&](VertexSet sub) {
      if (seen.insert(sub.bits()).second) out[sub.size()].push_back(sub);
    });
  }
  for (auto& group : out) std::sort(group.begin(), group.end());
  return out;
}

SimplicialComplex SimplicialComplex::compress(VertexSet removed) const {
  removed = removed & VertexSet::range(ground_size_);
  if (vertices().intersects(removed)) raise(ErrorKind::OutOfRange, "cannot delete a vertex that lies in a face");
  std::vector<std::size_t> relabel(ground_size_, 0);
  std::size_t next = 0;
  for (std::size_t v = 0; v < ground_size_; ++v) {
    if (!removed.contains(v)) relabel[v] = next++;
  }
  std::vector<Face> facets;
  for (Face f : facets_) {
    Face g;
    for (std::size_t v : f.elements()) g = g.with(relabel[v]);
    facets.push_back(g);
  }
  return SimplicialComplex(next, std::move(facets));
}

std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& edges) {
  std::vector<VertexSet> transversals{VertexSet{}};
  std::vector<VertexSet> ordered = minimal_sets(edges);
  for (VertexSet edge : ordered) {
    if (edge.empty()) return {};
    std::vector<VertexSet> next;
    for (VertexSet t : transversals) {
      if (t.intersects(edge)) {
        next.push_back(t);
      } else {
        for (std::size_t v : edge.elements()) next.push_back(t.with(v));
      }
    }
    transversals = minimal_sets(std::move(next));
  }
  return transversals;
}

std::optional<SimplicialComplex> complex_from_nonfaces(std::size_t ground_size,
                                                       const std::vector<VertexSet>& nonfaces,
                                                       const Limits& limits) {
  require_ground(ground_size);
  if (ground_size > limits.max_vertices) {
    raise(ErrorKind::CapExceeded, "facet search over " + std::to_string(ground_size) +
                                      " vertices exceeds the vertex cap " + std::to_string(limits.max_vertices));
  }
  const std::vector<VertexSet> edges = minimal_sets(nonfaces);
  if (!edges.empty() && edges.front().empty()) return std::nullopt;

  std::vector<std::vector<VertexSet>> edges_at(ground_size);
  for (VertexSet e : edges) {
    for (std::size_t v : e.elements()) {
      if (v >= ground_size) raise(ErrorKind::MalformedInput, "non-face leaves the ground set");
      edges_at[v].push_back(e);
    }
  }
  const auto addable = [&](VertexSet current, std::size_t v) {
    const VertexSet grown = current.with(v);
    return std::none_of(edges_at[v].begin(), edges_at[v].end(), [&](VertexSet e) { return e.subset_of(grown); });
  };

  // Backtracking over vertices in index order; an excluded vertex must be
  // blockable by some edge, otherwise the branch cannot end maximal.
  std::vector<Face> facets;
  std::function<void(std::size_t, VertexSet)> search = [&](std::size_t v, VertexSet current) {
    if (v == ground_size) {
      for (std::size_t u = 0; u < ground_size; ++u) {
        if (!current.contains(u) && addable(current, u)) return;
      }
      facets.push_back(current);
      return;
    }
    const bool can_add = addable(current, v);
    if (can_add) search(v + 1, current.with(v));
    const VertexSet later = VertexSet::range(ground_size) - VertexSet::range(v + 1);
    const bool blockable = !can_add || std::any_of(edges_at[v].begin(), edges_at[v].end(), [&](VertexSet e) {
      return (e.without(v) - current).subset_of(later);
    });
    if (blockable) search(v + 1, current);
  };
  search(0, VertexSet{});
  return SimplicialComplex(ground_size, std::move(facets));
}

SimplicialComplex from_squarefree_ideal(const MonomialIdeal& ideal, const Limits& limits) {
  require_proper(ideal);
  if (!ideal.is_squarefree()) {
    raise(ErrorKind::SquarefreeRequired, "the Stanley-Reisner complex needs a squarefree ideal; polarize first");
  }
  require_ground(ideal.num_vars());
  std::vector<VertexSet> nonfaces;
  for (const auto& g : ideal.gens()) nonfaces.push_back(g.support());
  return *complex_from_nonfaces(ideal.num_vars(), nonfaces, limits);
}

MonomialIdeal to_ideal(const SimplicialComplex& complex, const RingDescriptor& ring) {
  if (ring.size() != complex.ground_size()) raise(ErrorKind::RingMismatch, "ring size differs from the ground set");
  const VertexSet ground = VertexSet::range(complex.ground_size());
  std::vector<VertexSet> complements;
  for (Face f : complex.facets()) complements.push_back(ground - f);
  std::vector<Monomial> gens;
  for (VertexSet nonface : minimal_transversals(complements)) {
    gens.push_back(Monomial::squarefree(ring.size(), nonface));
  }
  return MonomialIdeal(ring, std::move(gens));
}

std::vector<PrimeSupport> minimal_primes(const SimplicialComplex& complex) {
  const VertexSet ground = VertexSet::range(complex.ground_size());
  std::vector<PrimeSupport> out;
  for (Face f : complex.facets()) out.push_back(PrimeSupport{ground - f});
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex link(const SimplicialComplex& complex, Face sigma) {
  if (!complex.contains(sigma)) raise(ErrorKind::NotAFace, "link of a set that is not a face");
  std::vector<Face> facets;
  for (Face f : complex.facets()) {
    if (sigma.subset_of(f)) facets.push_back(f - sigma);
  }
  return SimplicialComplex(complex.ground_size(), std::move(facets));
}

SimplicialComplex pure_skeleton(const SimplicialComplex& complex, int i) {
  if (i < -1 || i > complex.dim()) {
    raise(ErrorKind::OutOfRange, "skeleton dimension " + std::to_string(i) + " outside [-1, " +
                                     std::to_string(complex.dim()) + "]");
  }
  const std::size_t size = static_cast<std::size_t>(i + 1);
  std::unordered_set<VertexSet::Mask> seen;
  std::vector<Face> faces;
  for (Face f : complex.facets()) {
    if (f.size() < size) continue;
    for_each_subset(f, [&](VertexSet sub) {
      if (sub.size() == size && seen.insert(sub.bits()).second) faces.push_back(sub);
    });
  }
  return SimplicialComplex(complex.ground_size(), std::move(faces));
}

bool link_is_cone(const SimplicialComplex& complex, Face sigma) {
  VertexSet common = VertexSet::range(complex.ground_size());
  bool found = false;
  for (Face f : complex.facets()) {
    if (!sigma.subset_of(f)) continue;
    common = common & f;
    found = true;
  }
  return found && !(common - sigma).empty();
}

bool has_facet_above(const SimplicialComplex& complex, int i) {
  return std::any_of(complex.facets().begin(), complex.facets().end(),
                     [&](Face f) { return static_cast<int>(f.size()) > i; });
}

SimplicialComplex facet_subcomplex_min_dim(const SimplicialComplex& complex, int i) {
  std::vector<Face> kept;
  for (Face f : complex.facets()) {
    if (static_cast<int>(f.size()) > i) kept.push_back(f);
  }
  if (kept.empty()) return SimplicialComplex::empty_face(complex.ground_size());
  return SimplicialComplex(complex.ground_size(), std::move(kept));
}

VertexSet cone_vertices(const SimplicialComplex& complex) {
  VertexSet out = VertexSet::range(complex.ground_size());
  for (Face f : complex.facets()) out = out & f;
  return out;
}

}  // namespace mdepth
