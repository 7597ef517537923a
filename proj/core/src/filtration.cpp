#include "mdepth/filtration.hpp"

#include <algorithm>
#include <set>

#include "mdepth/decomposition.hpp"
#include "mdepth/error.hpp"
#include "mdepth/random.hpp"

namespace mdepth {
namespace {

int as_int(std::size_t v) { return static_cast<int>(v); }

/// The three depth-lemma inequalities for 0 → A → B → C → 0.
bool depth_lemma_allows(int a, int b, int c) {
  return a >= std::min(b, c + 1) && b >= std::min(a, c) && c >= std::min(a - 1, b);
}

std::optional<DepthInterval> feasible_range(const std::vector<int>& values) {
  if (values.empty()) return std::nullopt;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return DepthInterval{static_cast<std::size_t>(*lo), static_cast<std::size_t>(*hi)};
}

std::vector<PrimeSupport> by_coheight(const std::vector<PrimeSupport>& ass, std::size_t n, std::size_t i) {
  std::vector<PrimeSupport> out;
  for (PrimeSupport p : ass) {
    if (p.coheight(n) == i) out.push_back(p);
  }
  return out;
}

}  // namespace

const char* const kAttHypothesisReading =
    "every prime in Supp(M) contains an element of Assd(M) (checked on the minimal primes)";
const char* const kAttHypothesisAlternative = "some prime in Supp(M) contains an element of Assd(M)";

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Yes: return "true";
    case Verdict::No: return "false";
    case Verdict::Undecided: return "undecided";
  }
  return "undecided";
}

std::string_view to_string(AttJustification justification) {
  switch (justification) {
    case AttJustification::TopAssh: return "top-assh";
    case AttJustification::DepthMinAtt: return "depth-min-att";
    case AttJustification::SeqCmLevel: return "seqcm-level";
    case AttJustification::LowerBoundOnly: return "lower-bound-only";
  }
  return "lower-bound-only";
}

std::vector<MonomialIdeal> level_ideals_from_components(const MonomialIdeal& ideal) {
  require_proper(ideal);
  const std::size_t n = ideal.num_vars();
  const std::size_t d = krull_dim(ideal);
  const auto components = primary_decomposition(ideal);
  std::vector<MonomialIdeal> levels;
  for (std::size_t i = 0; i <= d; ++i) {
    MonomialIdeal level = MonomialIdeal::unit(ideal.ring());
    for (const auto& c : components) {
      if (c.radical.coheight(n) > i) level = intersect(level, c.ideal);
    }
    levels.push_back(std::move(level));
  }
  return levels;
}

std::vector<MonomialIdeal> level_ideals_from_complex(const MonomialIdeal& ideal, const Limits& limits) {
  const SimplicialComplex complex = from_squarefree_ideal(ideal, limits);
  std::vector<MonomialIdeal> levels;
  for (int i = 0; i <= complex.dim() + 1; ++i) {
    levels.push_back(has_facet_above(complex, i) ? to_ideal(facet_subcomplex_min_dim(complex, i), ideal.ring())
                                                 : MonomialIdeal::unit(ideal.ring()));
  }
  return levels;
}

DimensionFiltration dimension_filtration(const MonomialIdeal& ideal, const Limits& limits) {
  require_proper(ideal);
  const std::size_t n = ideal.num_vars();
  DimensionFiltration f{ideal, krull_dim(ideal), depth(ideal, limits), 0, associated_primes(ideal, limits), {}};
  auto ideals = ideal.is_squarefree() ? level_ideals_from_complex(ideal, limits) : level_ideals_from_components(ideal);
  bool seen_nonzero = false;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    FiltrationLevel level{i, std::move(ideals[i]), false, by_coheight(f.ass, n, i), std::nullopt, std::nullopt};
    level.nonzero = !(level.level_ideal == ideal);
    if (level.nonzero && !seen_nonzero) {
      f.t = i;
      seen_nonzero = true;
    }
    f.levels.push_back(std::move(level));
  }
  quotient_depth_intervals(f, limits);
  return f;
}

void quotient_depth_intervals(DimensionFiltration& f, const Limits& limits) {
  const int whole = as_int(f.depth);
  std::size_t dim_so_far = 0;
  bool any_prime = false;
  const FiltrationLevel* previous_nonzero = nullptr;

  for (auto& level : f.levels) {
    if (!level.ass_level.empty()) {
      dim_so_far = level.index;
      any_prime = true;
    }
    if (!level.nonzero) continue;
    if (!any_prime) raise(ErrorKind::Internal, "nonzero filtration level without associated primes");

    // M_i inside 0 → M_i → M → S/I^(i) → 0; depth M_i ≤ mdepth M_i = t
    const int ceiling = as_int(std::min(dim_so_far, f.t));
    std::vector<int> feasible;
    if (level.level_ideal.is_unit()) {
      feasible.push_back(whole);
    } else {
      const int rest = as_int(depth(level.level_ideal, limits));
      for (int a = 0; a <= ceiling; ++a) {
        if (depth_lemma_allows(a, whole, rest)) feasible.push_back(a);
      }
    }
    level.depth_interval = feasible_range(feasible);
    if (!level.depth_interval) raise(ErrorKind::Internal, "depth lemma admits no depth for a filtration level");

    // M_i / M_{i-1} inside 0 → M_{i-1} → M_i → M_i/M_{i-1} → 0; unmixed of dim i
    if (!level.ass_level.empty()) {
      if (previous_nonzero == nullptr) {
        level.quotient_interval = level.depth_interval;
      } else {
        const DepthInterval sub = *previous_nonzero->depth_interval;
        const DepthInterval mid = *level.depth_interval;
        std::vector<int> quotient;
        for (int c = 0; c <= as_int(level.index); ++c) {
          bool ok = false;
          for (int a = as_int(sub.lo); a <= as_int(sub.hi) && !ok; ++a) {
            for (int b = as_int(mid.lo); b <= as_int(mid.hi) && !ok; ++b) ok = depth_lemma_allows(a, b, c);
          }
          if (ok) quotient.push_back(c);
        }
        level.quotient_interval = feasible_range(quotient);
        if (!level.quotient_interval) raise(ErrorKind::Internal, "depth lemma admits no depth for a quotient");
      }
    }
    previous_nonzero = &level;
  }
}

std::vector<LevelValue> mdepth_chain(const DimensionFiltration& f) {
  std::vector<LevelValue> out;
  std::optional<std::size_t> lowest;
  for (const auto& level : f.levels) {
    if (!level.ass_level.empty() && !lowest) lowest = level.index;
    if (level.nonzero && lowest) out.push_back(LevelValue{level.index, *lowest});
  }
  return out;
}

std::vector<PrimeSupport> level_associated_primes(const DimensionFiltration& f, std::size_t i, const Limits& limits) {
  const MonomialIdeal& level = f.levels.at(i).level_ideal;
  std::vector<PrimeSupport> quotient;
  if (!level.is_unit()) quotient = associated_primes(level, limits);
  std::vector<PrimeSupport> out;
  std::set_difference(f.ass.begin(), f.ass.end(), quotient.begin(), quotient.end(), std::back_inserter(out));
  return out;
}

SeqCmResult is_sequentially_cm(const MonomialIdeal& ideal, const Limits& limits) {
  require_proper(ideal);
  if (!ideal.is_squarefree()) return SeqCmResult{Verdict::Undecided, std::nullopt};
  const SimplicialComplex complex = from_squarefree_ideal(ideal, limits);
  for (int i = 0; i <= complex.dim(); ++i) {
    if (auto w = reisner_witness(pure_skeleton(complex, i), ideal.ring().field(), limits)) {
      return SeqCmResult{Verdict::No, SeqCmWitness{i, w->face, w->homology_degree}};
    }
  }
  return SeqCmResult{Verdict::Yes, std::nullopt};
}

Verdict seqcm_from_filtration(const DimensionFiltration& f) {
  bool open = false;
  for (const auto& level : f.levels) {
    if (!level.quotient_interval) continue;
    const DepthInterval q = *level.quotient_interval;
    if (q.hi < level.index) return Verdict::No;
    if (!(q.exact() && q.lo == level.index)) open = true;
  }
  return open ? Verdict::Undecided : Verdict::Yes;
}

AttReport att_report(const MonomialIdeal& ideal, const Limits& limits) {
  const ModuleProfile prof = profile(ideal, limits);
  const std::size_t n = ideal.num_vars();
  AttReport report{prof.dim, prof.depth, false, is_sequentially_cm(ideal, limits).verdict, {}};

  const auto minimal = minimal_primes(ideal);
  report.depth_hypothesis_holds = std::all_of(minimal.begin(), minimal.end(), [&](PrimeSupport p) {
    return std::any_of(prof.assd.begin(), prof.assd.end(), [&](PrimeSupport q) { return q.vars.subset_of(p.vars); });
  });

  for (std::size_t i = 0; i <= prof.dim; ++i) {
    AttDegree entry{i, by_coheight(prof.ass, n, i), {}};
    if (i == prof.dim) entry.claims.push_back({AttJustification::TopAssh, entry.lower_bound});
    if (i == prof.depth && report.depth_hypothesis_holds) {
      entry.claims.push_back({AttJustification::DepthMinAtt, prof.assd});
    }
    if (report.sequentially_cm == Verdict::Yes) entry.claims.push_back({AttJustification::SeqCmLevel, entry.lower_bound});
    if (entry.claims.empty()) entry.claims.push_back({AttJustification::LowerBoundOnly, entry.lower_bound});
    report.degrees.push_back(std::move(entry));
  }
  return report;
}

std::vector<Face> psupp_monomial(const MonomialIdeal& ideal, std::size_t degree, const Limits& limits) {
  require_proper(ideal);
  if (!ideal.is_squarefree()) raise(ErrorKind::SquarefreeRequired, "Psupp scan needs a squarefree ideal");
  const SimplicialComplex complex = from_squarefree_ideal(ideal, limits);
  const FieldSpec field = ideal.ring().field();
  std::vector<Face> out;
  for (const auto& group : complex.faces_by_size(limits)) {
    for (Face face : group) {
      if (face.size() > degree) continue;
      const SimplicialComplex lk = link(complex, face).compress(face);
      const HochsterTable table = hochster_table(lk, field, limits);
      const std::size_t local = degree - face.size();
      if (local < table.rows.size() && table.rows[local].nonzero) out.push_back(face);
    }
  }
  return out;
}

std::vector<std::size_t> finite_length_nonvanishing_degrees(const ModuleProfile& prof) {
  std::vector<std::size_t> out;
  if (!prof.flags.maximal_depth || prof.depth == 0) return out;
  for (const auto& row : prof.hochster.rows) {
    if (row.nonzero && row.finite_length) out.push_back(row.degree);
  }
  return out;
}

ProbeReport probe_open_question(const ProbeConfig& config, FieldSpec field, const Limits& limits) {
  if (config.max_vertices > limits.max_vertices || config.min_vertices < 1 ||
      config.min_vertices > config.max_vertices) {
    raise(ErrorKind::CapExceeded, "probe vertex range [" + std::to_string(config.min_vertices) + ", " +
                                      std::to_string(config.max_vertices) + "] not within [1, " +
                                      std::to_string(limits.max_vertices) + "]");
  }
  ProbeReport report{config, field, 0, {}};
  InstanceGenerator gen(config.seed);
  for (std::size_t s = 0; s < config.samples; ++s) {
    const std::size_t n = gen.between(config.min_vertices, config.max_vertices);
    const MonomialIdeal ideal = gen.squarefree_ideal(n, field);
    const ModuleProfile prof = profile(ideal, limits);
    if (!prof.flags.maximal_depth || prof.depth == 0) continue;
    ++report.eligible;
    const auto degrees = finite_length_nonvanishing_degrees(prof);
    if (degrees.empty()) continue;
    const bool seqcm = is_sequentially_cm(ideal, limits).verdict == Verdict::Yes;
    for (std::size_t i : degrees) {
      report.hits.push_back(ProbeHit{ideal, i, prof.depth, prof.dim, *prof.hochster.rows[i].k_dim, seqcm});
    }
  }
  return report;
}

}  // namespace mdepth
