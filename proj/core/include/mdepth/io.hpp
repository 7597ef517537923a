#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mdepth/complex.hpp"
#include "mdepth/ideal.hpp"

namespace mdepth {

/// "q" | "f2" | "fp=P"
FieldSpec parse_field(std::string_view text);

/// Generators separated by commas; monomials as `x1*x2^2`, or as implicit
/// products `x1x2`. "0" or an empty list is the zero ideal, "1" the unit
/// ideal. Variables are x1..xn with n = `num_vars` or the largest index seen.
MonomialIdeal parse_ideal_text(std::string_view text, std::optional<std::size_t> num_vars = std::nullopt,
                               FieldSpec field = FieldSpec::rationals());

/// {"vars": [...], "gens": [[e1, ..., en], ...]}
MonomialIdeal parse_ideal_json(std::string_view text, FieldSpec field = FieldSpec::rationals());

/// `n=8; edges=1-2,2-3,...` (1-based vertices) to the edge ideal.
MonomialIdeal parse_edge_list(std::string_view text, FieldSpec field = FieldSpec::rationals());

/// {"vertices": n, "facets": [[...], ...]} with 1-based vertices.
SimplicialComplex parse_facet_json(std::string_view text);

/// Dispatches on content: JSON objects with "gens" or "facets", edge lists
/// containing "edges=", ideal text otherwise.
MonomialIdeal parse_input(std::string_view text, std::optional<std::size_t> num_vars = std::nullopt,
                          FieldSpec field = FieldSpec::rationals());

/// Edge ideal of a graph on n vertices; edges are 0-based pairs.
MonomialIdeal edge_ideal(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                         FieldSpec field = FieldSpec::rationals());
/// Edge ideal of the n-cycle.
MonomialIdeal cycle_ideal(std::size_t n, FieldSpec field = FieldSpec::rationals());

std::string format_monomial(const Monomial& u, const RingDescriptor& ring);
std::string format_ideal(const MonomialIdeal& ideal);
/// "(x1,x3)"; the zero prime prints as "(0)".
std::string format_prime(PrimeSupport p, const RingDescriptor& ring);
/// "{x1,x3}"
std::string format_face(Face face, const RingDescriptor& ring);

}  // namespace mdepth
