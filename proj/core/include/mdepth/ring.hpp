#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "mdepth/vertex_set.hpp"

namespace mdepth {

/// Coefficient field: the rationals (characteristic 0) or a prime field.
struct FieldSpec {
  std::uint32_t characteristic = 0;

  static FieldSpec rationals() { return {}; }
  /// Throws MalformedInput unless `p` is prime.
  static FieldSpec prime(std::uint32_t p);

  bool is_rational() const { return characteristic == 0; }
  /// "QQ" or "GF(p)".
  std::string tag() const;

  friend bool operator==(FieldSpec, FieldSpec) = default;
};

/// The ambient polynomial ring K[x_1, ..., x_n]: variable labels plus the
/// coefficient field. Cheap to copy.
class RingDescriptor {
 public:
  RingDescriptor(std::vector<std::string> names, FieldSpec field = FieldSpec::rationals());

  /// Variables named x1, ..., xn.
  static RingDescriptor standard(std::size_t n, FieldSpec field = FieldSpec::rationals());

  std::size_t size() const { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const { return *names_; }
  FieldSpec field() const { return field_; }

  RingDescriptor with_field(FieldSpec field) const;
  /// The ring on the variables outside `removed`, order preserved.
  RingDescriptor without(VertexSet removed) const;

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b);

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
  FieldSpec field_;
};

}  // namespace mdepth
