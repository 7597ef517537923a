#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mdepth/complex.hpp"
#include "mdepth/ideal.hpp"
#include "mdepth/invariants.hpp"
#include "mdepth/limits.hpp"

namespace mdepth {

struct DepthInterval {
  std::size_t lo = 0;
  std::size_t hi = 0;

  bool exact() const { return lo == hi; }
  friend bool operator==(DepthInterval, DepthInterval) = default;
};

struct FiltrationLevel {
  std::size_t index = 0;
  /// I^(i), with M_i = I^(i)/I. The unit ideal encodes M_i = M.
  MonomialIdeal level_ideal;
  bool nonzero = false;
  /// Ass^i(M): associated primes p with dim S/p = i.
  std::vector<PrimeSupport> ass_level;
  /// Depth bounds for M_i and for M_i / M_{i-1}; absent for zero modules.
  std::optional<DepthInterval> depth_interval;
  std::optional<DepthInterval> quotient_interval;
};

/// 0 = M_0 ⊂ M_1 ⊂ ... ⊂ M_d = M for M = S/I.
struct DimensionFiltration {
  MonomialIdeal base;
  std::size_t dim = 0;
  std::size_t depth = 0;
  /// min{i : M_i ≠ 0}
  std::size_t t = 0;
  /// Ass(M), by colon search.
  std::vector<PrimeSupport> ass;
  std::vector<FiltrationLevel> levels;
};

/// I^(i) = intersection of the primary components of I whose radical p has
/// dim S/p > i (unit ideal for the empty family), for i = 0..dim.
std::vector<MonomialIdeal> level_ideals_from_components(const MonomialIdeal& ideal);
/// Squarefree route: the ideal of the subcomplex generated by the facets with
/// more than i vertices.
std::vector<MonomialIdeal> level_ideals_from_complex(const MonomialIdeal& ideal, const Limits& limits = {});

/// Builds the filtration, its Ass^i sets and depth intervals. Squarefree
/// ideals take the complex route; others the primary-component route.
DimensionFiltration dimension_filtration(const MonomialIdeal& ideal, const Limits& limits = {});

/// Depth-lemma propagation along 0 → M_i → M → M/M_i → 0, then along
/// 0 → M_{i-1} → M_i → M_i/M_{i-1} → 0. Fills the interval fields of
/// `filtration` in a single pass.
void quotient_depth_intervals(DimensionFiltration& filtration, const Limits& limits = {});

struct LevelValue {
  std::size_t index = 0;
  std::size_t value = 0;
};

/// mdepth M_i for every nonzero level, computed from Ass^0 ∪ ... ∪ Ass^i.
std::vector<LevelValue> mdepth_chain(const DimensionFiltration& filtration);

/// Ass(M_i) computed as Ass(M) ∖ Ass(S/I^(i)), the latter by colon search.
std::vector<PrimeSupport> level_associated_primes(const DimensionFiltration& filtration, std::size_t i,
                                                  const Limits& limits = {});

enum class Verdict { Yes, No, Undecided };
std::string_view to_string(Verdict verdict);

struct SeqCmWitness {
  /// The pure skeleton that fails to be Cohen–Macaulay.
  int skeleton_dim = 0;
  Face face;
  int homology_degree = 0;
};

struct SeqCmResult {
  Verdict verdict = Verdict::Undecided;
  std::optional<SeqCmWitness> witness;
};

/// Pure-skeleton criterion: K[Δ] is sequentially CM iff every pure
/// i-skeleton is CM. Non-squarefree input yields Undecided.
SeqCmResult is_sequentially_cm(const MonomialIdeal& ideal, const Limits& limits = {});

/// The same question answered from the filtration: every nonzero quotient
/// M_i/M_{i-1} must have depth i. Undecided when an interval leaves it open.
Verdict seqcm_from_filtration(const DimensionFiltration& filtration);

enum class AttJustification { TopAssh, DepthMinAtt, SeqCmLevel, LowerBoundOnly };
std::string_view to_string(AttJustification justification);

struct AttClaim {
  AttJustification justification = AttJustification::LowerBoundOnly;
  /// For DepthMinAtt the claim is about min Att; otherwise about Att.
  std::vector<PrimeSupport> primes;
};

struct AttDegree {
  std::size_t degree = 0;
  /// Associated primes of dimension `degree`, all of which are attached.
  std::vector<PrimeSupport> lower_bound;
  std::vector<AttClaim> claims;
};

struct AttReport {
  std::size_t dim = 0;
  std::size_t depth = 0;
  /// Every minimal prime contains an Assd prime (hence every prime of Supp).
  bool depth_hypothesis_holds = false;
  Verdict sequentially_cm = Verdict::Undecided;
  std::vector<AttDegree> degrees;
};

/// Reading of the hypothesis used for the depth-degree claim, and the
/// alternative reading; printed in report headers.
extern const char* const kAttHypothesisReading;
extern const char* const kAttHypothesisAlternative;

AttReport att_report(const MonomialIdeal& ideal, const Limits& limits = {});

/// Faces F with H^{i-|F|}_m(K[lk F]) ≠ 0, canonical order. Squarefree only.
std::vector<Face> psupp_monomial(const MonomialIdeal& ideal, std::size_t degree, const Limits& limits = {});

/// Degrees i with H^i ≠ 0 of finite length, for a module with maximal depth
/// and positive depth; empty otherwise.
std::vector<std::size_t> finite_length_nonvanishing_degrees(const ModuleProfile& profile);

struct ProbeConfig {
  std::uint64_t seed = 0;
  std::size_t samples = 200;
  std::size_t min_vertices = 3;
  std::size_t max_vertices = 9;
};

struct ProbeHit {
  MonomialIdeal ideal;
  std::size_t degree = 0;
  std::size_t depth = 0;
  std::size_t dim = 0;
  std::size_t k_dim = 0;
  bool sequentially_cm = false;
};

struct ProbeReport {
  ProbeConfig config;
  FieldSpec field;
  std::size_t eligible = 0;
  std::vector<ProbeHit> hits;
};

/// Samples random squarefree instances and lists every (instance, i) where a
/// module with maximal depth and positive depth has H^i ≠ 0 of finite length.
ProbeReport probe_open_question(const ProbeConfig& config, FieldSpec field = FieldSpec::rationals(),
                                const Limits& limits = {});

}  // namespace mdepth
