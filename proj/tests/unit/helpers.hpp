#pragma once

#include <initializer_list>
#include <string>

#include "mdepth/io.hpp"

namespace testing_helpers {

inline mdepth::MonomialIdeal ideal(const std::string& text, std::size_t n,
                                   mdepth::FieldSpec field = mdepth::FieldSpec::rationals()) {
  return mdepth::parse_ideal_text(text, n, field);
}

inline mdepth::Face face(std::initializer_list<std::size_t> one_based) {
  mdepth::Face f;
  for (std::size_t v : one_based) f = f.with(v - 1);
  return f;
}

inline mdepth::PrimeSupport prime(std::initializer_list<std::size_t> one_based) { return {face(one_based)}; }

inline mdepth::SimplicialComplex hollow_triangle() {
  return mdepth::SimplicialComplex(3, {face({1, 2}), face({2, 3}), face({1, 3})});
}

inline mdepth::SimplicialComplex rp2() {
  return mdepth::SimplicialComplex(6, {face({1, 2, 3}), face({1, 3, 4}), face({1, 4, 5}), face({1, 5, 6}),
                                       face({1, 2, 6}), face({2, 3, 5}), face({2, 4, 5}), face({2, 4, 6}),
                                       face({3, 4, 6}), face({3, 5, 6})});
}

/// Seven-vertex torus on vertices first..first+6.
inline std::vector<mdepth::Face> moebius_torus(std::size_t first) {
  std::vector<mdepth::Face> facets;
  for (std::size_t i = 0; i < 7; ++i) {
    const auto v = [&](std::size_t k) { return first + (i + k) % 7; };
    facets.push_back(mdepth::Face().with(v(0)).with(v(1)).with(v(3)));
    facets.push_back(mdepth::Face().with(v(0)).with(v(2)).with(v(3)));
  }
  return facets;
}

}  // namespace testing_helpers
