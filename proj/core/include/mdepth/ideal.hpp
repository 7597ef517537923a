#pragma once

#include <span>
#include <vector>

#include "mdepth/monomial.hpp"
#include "mdepth/ring.hpp"
#include "mdepth/vertex_set.hpp"

namespace mdepth {

/// A monomial ideal in canonical form: minimal generators, sorted graded-lex.
/// Two ideals are equal iff their generator lists are equal. The zero ideal
/// has no generators; the unit ideal is generated by the monomial 1.
class MonomialIdeal {
 public:
  /// Minimalizes and sorts. Throws MalformedInput if an exponent vector does
  /// not have the ring's length.
  MonomialIdeal(RingDescriptor ring, std::vector<Monomial> gens);

  static MonomialIdeal zero(RingDescriptor ring);
  static MonomialIdeal unit(RingDescriptor ring);
  static MonomialIdeal prime(RingDescriptor ring, PrimeSupport p);

  const RingDescriptor& ring() const { return ring_; }
  std::size_t num_vars() const { return ring_.size(); }
  std::span<const Monomial> gens() const { return gens_; }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_.front().is_one(); }
  bool is_squarefree() const;
  /// Ideal generated by variables only (including the zero ideal).
  bool is_prime() const;

  bool contains(const Monomial& u) const;
  /// other ⊆ *this
  bool contains(const MonomialIdeal& other) const;

  /// Exponentwise maximum over the generators (the lcm of the generators).
  Monomial exponent_lcm() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

 private:
  RingDescriptor ring_;
  std::vector<Monomial> gens_;
};

/// Canonical minimal generating set of the ideal generated by `gens`.
MonomialIdeal minimalize(const RingDescriptor& ring, std::vector<Monomial> gens);

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
/// (I : u)
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u);
MonomialIdeal radical(const MonomialIdeal& ideal);

/// Throws RingMismatch when the rings differ.
void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b);
/// Throws UndefinedModule for the unit ideal.
void require_proper(const MonomialIdeal& ideal);

}  // namespace mdepth
