#include "mdepth/ring.hpp"

#include <algorithm>
#include <unordered_set>

#include "mdepth/error.hpp"

namespace mdepth {

std::vector<std::size_t> VertexSet::elements() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (Mask rest = bits_; rest != 0; rest &= rest - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
  }
  return out;
}

VertexSet VertexSet::of(std::initializer_list<std::size_t> vertices) {
  return of(std::vector<std::size_t>(vertices));
}

VertexSet VertexSet::of(const std::vector<std::size_t>& vertices) {
  VertexSet out;
  for (std::size_t v : vertices) {
    if (v >= kCapacity) raise(ErrorKind::CapExceeded, "vertex index " + std::to_string(v) + " exceeds 63");
    out = out.with(v);
  }
  return out;
}

std::vector<VertexSet> maximal_sets(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> out;
  // sorted by size: a set can only be contained in a later one
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = i + 1; j < sets.size() && !dominated; ++j) {
      dominated = sets[i].subset_of(sets[j]);
    }
    if (!dominated) out.push_back(sets[i]);
  }
  return out;
}

std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<VertexSet> out;
  for (VertexSet s : sets) {
    const bool dominated = std::any_of(out.begin(), out.end(), [&](VertexSet kept) { return kept.subset_of(s); });
    if (!dominated) out.push_back(s);
  }
  return out;
}

namespace {

bool is_prime_number(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime_number(p)) raise(ErrorKind::MalformedInput, "field characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec{p};
}

std::string FieldSpec::tag() const {
  return is_rational() ? std::string("QQ") : "GF(" + std::to_string(characteristic) + ")";
}

RingDescriptor::RingDescriptor(std::vector<std::string> names, FieldSpec field) : field_(field) {
  std::unordered_set<std::string> seen;
  for (const auto& name : names) {
    if (name.empty()) raise(ErrorKind::MalformedInput, "empty variable name");
    if (!seen.insert(name).second) raise(ErrorKind::MalformedInput, "duplicate variable name " + name);
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

RingDescriptor RingDescriptor::standard(std::size_t n, FieldSpec field) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return RingDescriptor(std::move(names), field);
}

RingDescriptor RingDescriptor::with_field(FieldSpec field) const {
  RingDescriptor out = *this;
  out.field_ = field;
  return out;
}

RingDescriptor RingDescriptor::without(VertexSet removed) const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!removed.contains(i)) names.push_back(name(i));
  }
  return RingDescriptor(std::move(names), field_);
}

bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
  return a.field_ == b.field_ && (a.names_ == b.names_ || *a.names_ == *b.names_);
}

}  // namespace mdepth
