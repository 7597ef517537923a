#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mdepth/ideal.hpp"
#include "mdepth/limits.hpp"
#include "mdepth/vertex_set.hpp"

namespace mdepth {

/// A nonempty simplicial complex on the ground set {0, ..., n-1}, stored by
/// its facets (pairwise non-containing, canonical order). The void complex is
/// not representable; {∅} is a single empty facet.
class SimplicialComplex {
 public:
  /// Maximalizes `facets`. Throws MalformedInput if `facets` is empty or a
  /// facet leaves the ground set.
  SimplicialComplex(std::size_t ground_size, std::vector<Face> facets);

  static SimplicialComplex simplex(std::size_t ground_size);
  /// The complex {∅}.
  static SimplicialComplex empty_face(std::size_t ground_size);

  std::size_t ground_size() const { return ground_size_; }
  const std::vector<Face>& facets() const { return facets_; }
  /// Union of the facets.
  VertexSet vertices() const;
  /// max facet size - 1; -1 for {∅}.
  int dim() const;
  bool contains(Face face) const;

  /// All faces, grouped by size: result[k] holds the (k-1)-dimensional faces
  /// in canonical order (result[0] = {∅}). Throws CapExceeded past
  /// `limits.search_cap` faces.
  std::vector<std::vector<Face>> faces_by_size(const Limits& limits = {}) const;

  /// Relabels the ground set after deleting `removed`, which must avoid every
  /// face.
  SimplicialComplex compress(VertexSet removed) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t ground_size_;
  std::vector<Face> facets_;
};

/// The complex whose minimal non-faces are the minimal members of `nonfaces`,
/// facets found by exhaustive maximal-independent-set search. nullopt when
/// the empty set is a non-face (the void complex).
std::optional<SimplicialComplex> complex_from_nonfaces(std::size_t ground_size,
                                                       const std::vector<VertexSet>& nonfaces,
                                                       const Limits& limits = {});

/// Stanley–Reisner complex of a squarefree proper ideal. Throws
/// SquarefreeRequired, UndefinedModule, or CapExceeded past
/// `limits.max_vertices`.
SimplicialComplex from_squarefree_ideal(const MonomialIdeal& ideal, const Limits& limits = {});

/// Stanley–Reisner ideal: generated by the minimal non-faces.
MonomialIdeal to_ideal(const SimplicialComplex& complex, const RingDescriptor& ring);

/// Facet complements, canonical order.
std::vector<PrimeSupport> minimal_primes(const SimplicialComplex& complex);

/// lk σ = {τ : τ ∩ σ = ∅, τ ∪ σ ∈ Δ}, on the same ground set. Throws NotAFace.
SimplicialComplex link(const SimplicialComplex& complex, Face sigma);

/// Whether lk σ is a cone, i.e. the facets containing σ share a vertex
/// outside σ. Cones are acyclic, so homology scans may skip them.
bool link_is_cone(const SimplicialComplex& complex, Face sigma);

/// Subcomplex generated by the i-dimensional faces, -1 ≤ i ≤ dim. Throws
/// OutOfRange.
SimplicialComplex pure_skeleton(const SimplicialComplex& complex, int i);

/// Subcomplex generated by the facets with more than i vertices; {∅} when
/// there are none (see `has_facet_above`).
SimplicialComplex facet_subcomplex_min_dim(const SimplicialComplex& complex, int i);
bool has_facet_above(const SimplicialComplex& complex, int i);

/// Vertices lying in every facet.
VertexSet cone_vertices(const SimplicialComplex& complex);

/// Minimal sets meeting every member of `edges` (Berge's incremental
/// algorithm). An empty member admits no transversal: the result is empty.
std::vector<VertexSet> minimal_transversals(const std::vector<VertexSet>& edges);

}  // namespace mdepth
