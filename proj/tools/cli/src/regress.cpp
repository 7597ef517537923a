#include "regress.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "mdepth/decomposition.hpp"
#include "mdepth/error.hpp"
#include "mdepth/io.hpp"

namespace mdepth::cli {
namespace {

PrimeSupport prime(std::initializer_list<std::size_t> one_based) {
  PrimeSupport p;
  for (std::size_t v : one_based) p.vars = p.vars.with(v - 1);
  return p;
}

Face face(std::initializer_list<std::size_t> one_based) { return prime(one_based).vars; }

std::string text(bool b) { return b ? "true" : "false"; }
std::string text(std::size_t v) { return std::to_string(v); }
std::string text(const std::string& s) { return s; }
std::string text(std::string_view s) { return std::string(s); }
std::string text(const MonomialIdeal& ideal) { return format_ideal(ideal); }
std::string text(std::optional<DepthInterval> interval) {
  return interval ? "[" + std::to_string(interval->lo) + "," + std::to_string(interval->hi) + "]" : "-";
}
std::string text(const std::vector<PrimeSupport>& primes, const RingDescriptor& ring) {
  std::string out;
  for (PrimeSupport p : primes) out += (out.empty() ? "" : " ") + format_prime(p, ring);
  return out.empty() ? "none" : out;
}

class Pins {
 public:
  template <typename T>
  void check(const std::string& id, const T& expected, const T& actual) {
    record(id, text(expected), text(actual), expected == actual);
  }
  void check_text(const std::string& id, const std::string& expected, const std::string& actual) {
    record(id, expected, actual, expected == actual);
  }

  void group(const std::string& id, const std::function<void(Pins&)>& body) {
    try {
      body(*this);
    } catch (const std::exception& e) {
      record(id, "no error", std::string("error: ") + e.what(), false);
    }
  }

  Json rows = Json::array();
  std::size_t failed = 0;

 private:
  void record(const std::string& id, const std::string& expected, const std::string& actual, bool ok) {
    rows.push_back(Json{{"id", id}, {"expected", expected}, {"actual", actual}, {"status", ok ? "ok" : "MISMATCH"}});
    if (!ok) ++failed;
  }
};

const std::vector<PrimeSupport>& c8_primes() {
  static const std::vector<PrimeSupport> listed = {
      prime({1, 3, 5, 7}),    prime({2, 4, 6, 8}),    prime({2, 3, 5, 7, 8}), prime({2, 3, 5, 6, 8}),
      prime({1, 3, 5, 6, 8}), prime({1, 3, 4, 6, 8}), prime({1, 2, 4, 5, 7}), prime({1, 2, 4, 6, 7}),
      prime({1, 3, 4, 6, 7}), prime({2, 4, 5, 7, 8})};
  return listed;
}

std::vector<PrimeSupport> sorted(std::vector<PrimeSupport> primes) {
  std::sort(primes.begin(), primes.end());
  return primes;
}

void eight_cycle(Pins& pins) {
  const MonomialIdeal c8 = cycle_ideal(8);
  const RingDescriptor& ring = c8.ring();
  const MonomialIdeal written =
      parse_ideal_text("x1*x2, x2*x3, x3*x4, x4*x5, x5*x6, x6*x7, x7*x8, x1*x8", std::size_t{8});
  pins.check("c8.generators-minimal", std::size_t{8}, written.gens().size());
  pins.check("c8.generators-equal-edge-ideal", c8, written);

  MonomialIdeal meet = MonomialIdeal::unit(ring);
  for (PrimeSupport p : c8_primes()) meet = intersect(meet, MonomialIdeal::prime(ring, p));
  pins.check("c8.primes-intersect-to-ideal", c8, meet);

  const auto expected = sorted(c8_primes());
  pins.check_text("c8.associated-primes", text(expected, ring), text(sorted(associated_primes(c8)), ring));

  const SimplicialComplex complex = from_squarefree_ideal(c8);
  pins.check("c8.independence-complex-ideal", c8, to_ideal(complex, ring));
  pins.check_text("c8.independence-complex-primes", text(expected, ring),
                  text(sorted(minimal_primes(complex)), ring));

  const MonomialIdeal p12 =
      intersect(MonomialIdeal::prime(ring, c8_primes()[0]), MonomialIdeal::prime(ring, c8_primes()[1]));
  const SimplicialComplex top = facet_subcomplex_min_dim(complex, 3);
  std::string facets;
  for (Face f : top.facets()) facets += (facets.empty() ? "" : " ") + format_face(f, ring);
  pins.check_text("c8.level-3-subcomplex-facets",
                  format_face(face({1, 3, 5, 7}), ring) + " " + format_face(face({2, 4, 6, 8}), ring), facets);
  pins.check("c8.level-3-subcomplex-ideal", p12, to_ideal(top, ring));

  const ModuleProfile p = profile(c8);
  pins.check("c8.dim", std::size_t{4}, p.dim);
  pins.check("c8.depth", std::size_t{3}, p.depth);
  pins.check("c8.mdepth", std::size_t{3}, p.mdepth);
  pins.check("c8.maximal-depth", true, p.flags.maximal_depth);

  const DimensionFiltration f = dimension_filtration(c8);
  pins.check("c8.filtration-t", std::size_t{3}, f.t);
  pins.check("c8.filtration-length", std::size_t{5}, f.levels.size());
  if (f.levels.size() == 5) {
    for (std::size_t i = 0; i < 3; ++i) pins.check("c8.level-" + std::to_string(i) + "-ideal", c8, f.levels[i].level_ideal);
    pins.check("c8.level-3-ideal", p12, f.levels[3].level_ideal);
    pins.check("c8.level-4-ideal", MonomialIdeal::unit(ring), f.levels[4].level_ideal);
    pins.check("c8.level-3-depth-interval", std::optional<DepthInterval>(DepthInterval{2, 2}), f.levels[3].depth_interval);
  }
  std::string chain;
  for (const auto& v : mdepth_chain(f)) chain += (chain.empty() ? "" : " ") + std::to_string(v.index) + ":" + std::to_string(v.value);
  pins.check_text("c8.mdepth-chain", "3:3 4:3", chain);
  pins.check("c8.sequentially-cm", std::string("false"), text(to_string(is_sequentially_cm(c8).verdict)));

  const auto faces = psupp_monomial(c8, 3);
  pins.check("c8.psupp-3-contains-empty-face", true, std::find(faces.begin(), faces.end(), Face{}) != faces.end());
  pins.check("c8.localization-oracles-all-faces", true, check_localization_oracles(c8) > 0);
}

void skew_lines(Pins& pins) {
  const RingDescriptor ring = RingDescriptor::standard(4);
  const MonomialIdeal ideal = intersect(MonomialIdeal::prime(ring, prime({1, 2})), MonomialIdeal::prime(ring, prime({3, 4})));
  const ModuleProfile p = profile(ideal);
  pins.check("skew-lines.depth", std::size_t{1}, p.depth);
  pins.check("skew-lines.mdepth", std::size_t{2}, p.mdepth);
  pins.check("skew-lines.maximal-depth", false, p.flags.maximal_depth);
  pins.check("skew-lines.generalized-cm", true, p.flags.generalized_cm);
  pins.check("skew-lines.h0-zero", false, p.hochster.rows.at(0).nonzero);
  pins.check("skew-lines.h1-finite-length", true, p.hochster.rows.at(1).nonzero && p.hochster.rows.at(1).finite_length);
  pins.check("skew-lines.h1-k-dim", std::size_t{1}, p.hochster.rows.at(1).k_dim.value_or(0));
}

void structural(Pins& pins) {
  const MonomialIdeal embedded = parse_ideal_text("x1^2, x1*x2", std::size_t{2});
  const ModuleProfile e = profile(embedded);
  pins.check("depth-zero.depth", std::size_t{0}, e.depth);
  pins.check("depth-zero.maximal-depth", true, e.flags.maximal_depth);

  const MonomialIdeal left = cycle_ideal(4);
  const MonomialIdeal right = parse_ideal_text("x1*x2", std::size_t{2});
  const MonomialIdeal joined = tensor_join(left, right);
  std::vector<PrimeSupport> unions;
  for (PrimeSupport p : associated_primes(left)) {
    for (PrimeSupport q : associated_primes(right)) {
      VertexSet shifted;
      for (std::size_t v : q.vars.elements()) shifted = shifted.with(v + left.num_vars());
      unions.push_back(PrimeSupport{p.vars | shifted});
    }
  }
  pins.check_text("join.associated-primes-pairwise-unions", text(sorted(unions), joined.ring()),
                  text(sorted(associated_primes(joined)), joined.ring()));

  // Cone over the 8-cycle's independence complex: x9 is a nonzerodivisor.
  const MonomialIdeal cone = parse_ideal_text("x1*x2, x2*x3, x3*x4, x4*x5, x5*x6, x6*x7, x7*x8, x1*x8", std::size_t{9});
  const MonomialIdeal quotient = quotient_by_variable(cone, 8);
  pins.check("cone.maximal-depth", true, profile(cone).flags.maximal_depth);
  pins.check("cone.quotient-maximal-depth", true, profile(quotient).flags.maximal_depth);

  const RingDescriptor ring4 = RingDescriptor::standard(4);
  const std::vector<ModuleProfile> parts = {profile(MonomialIdeal::prime(ring4, prime({1, 2, 3}))),
                                            profile(parse_ideal_text("x1*x2", std::size_t{4}))};
  pins.check("direct-sum.cm-summand-of-least-depth", true, direct_sum_profile(parts).flags.maximal_depth);
  pins.check("direct-sum.summand-rule", true, direct_sum_rule(parts));
}

void cycles(Pins& pins) {
  const std::vector<std::pair<std::size_t, bool>> family = {{3, true}, {4, false}, {5, true}, {6, false}, {7, false}, {8, false}};
  for (const auto& [n, expected] : family) {
    const std::string id = "c" + std::to_string(n);
    const MonomialIdeal ideal = cycle_ideal(n);
    const Verdict skeleton = is_sequentially_cm(ideal).verdict;
    pins.check(id + ".sequentially-cm", text(expected), text(to_string(skeleton)));
    const Verdict filtered = seqcm_from_filtration(dimension_filtration(ideal));
    pins.check(id + ".filtration-path-consistent", true, filtered == Verdict::Undecided || filtered == skeleton);
  }
}

void attached(Pins& pins) {
  const MonomialIdeal c5 = cycle_ideal(5);
  const AttReport report = att_report(c5);
  for (const auto& d : report.degrees) {
    const auto level = std::find_if(d.claims.begin(), d.claims.end(),
                                    [](const AttClaim& c) { return c.justification == AttJustification::SeqCmLevel; });
    pins.check_text("c5.att-" + std::to_string(d.degree) + "-equals-ass-level", text(d.lower_bound, c5.ring()),
                    level == d.claims.end() ? "no claim" : text(level->primes, c5.ring()));
  }

  const MonomialIdeal cm = parse_ideal_text("x1*x2", std::size_t{3});
  const ModuleProfile p = profile(cm);
  const AttReport top = att_report(cm);
  const AttDegree& d = top.degrees.at(p.dim);
  for (auto j : {AttJustification::TopAssh, AttJustification::DepthMinAtt}) {
    const auto claim = std::find_if(d.claims.begin(), d.claims.end(), [&](const AttClaim& c) { return c.justification == j; });
    pins.check_text("cm.att-top-" + std::string(to_string(j)), text(p.assd, cm.ring()),
                    claim == d.claims.end() ? "no claim" : text(claim->primes, cm.ring()));
  }
}

void probe_pins(Pins& pins) {
  const ProbeReport report = probe_open_question(ProbeConfig{1, 200, 3, 8});
  std::size_t at_depth = 0;
  std::size_t at_dim = 0;
  std::size_t seqcm = 0;
  for (const auto& hit : report.hits) {
    at_depth += hit.degree == hit.depth;
    at_dim += hit.dim > 0 && hit.degree == hit.dim;
    seqcm += hit.sequentially_cm;
  }
  pins.check("probe.no-hit-at-depth", std::size_t{0}, at_depth);
  pins.check("probe.no-hit-at-dim", std::size_t{0}, at_dim);
  pins.check("probe.no-sequentially-cm-hit", std::size_t{0}, seqcm);
}

void field_dependence(Pins& pins) {
  const SimplicialComplex rp2(6, {face({1, 2, 3}), face({1, 3, 4}), face({1, 4, 5}), face({1, 5, 6}), face({1, 2, 6}),
                                  face({2, 3, 5}), face({2, 4, 5}), face({2, 4, 6}), face({3, 4, 6}), face({3, 5, 6})});
  const auto q = to_ideal(rp2, RingDescriptor::standard(6));
  const auto f2 = to_ideal(rp2, RingDescriptor::standard(6, FieldSpec::prime(2)));
  pins.check("rp2.cm-over-QQ", true, is_cohen_macaulay(rp2, FieldSpec::rationals()));
  pins.check("rp2.cm-over-GF(2)", false, is_cohen_macaulay(rp2, FieldSpec::prime(2)));
  pins.check("rp2.depth-drop", depth(q), depth(f2) + 1);
  pins.check("rp2.auslander-buchsbaum-QQ", std::size_t{6}, depth(q) + projdim(q));
  pins.check("rp2.auslander-buchsbaum-GF(2)", std::size_t{6}, depth(f2) + projdim(f2));
}

Json cli_json(Request request) {
  request.format = Format::Json;
  const Outcome outcome = run(request);
  if (outcome.exit_code != kExitOk) raise(ErrorKind::Internal, outcome.err);
  return Json::parse(outcome.out);
}

void command_line(Pins& pins) {
  Request c8;
  c8.command = "analyze";
  c8.edges = {"1-2,2-3,3-4,4-5,5-6,6-7,7-8,8-1"};
  const Json a = cli_json(c8);
  pins.check("cli.analyze-c8.depth", std::size_t{3}, a.at("depth").get<std::size_t>());
  pins.check("cli.analyze-c8.mdepth", std::size_t{3}, a.at("mdepth").get<std::size_t>());
  pins.check("cli.analyze-c8.maximal-depth", true, a.at("maximal_depth").get<bool>());

  Request skew;
  skew.command = "analyze";
  skew.gens = {"x1*x3,x1*x4,x2*x3,x2*x4"};
  const Json b = cli_json(skew);
  pins.check("cli.analyze-skew-lines.depth", std::size_t{1}, b.at("depth").get<std::size_t>());
  pins.check("cli.analyze-skew-lines.mdepth", std::size_t{2}, b.at("mdepth").get<std::size_t>());
  pins.check("cli.analyze-skew-lines.generalized-cm", true, b.at("generalized_cm").get<bool>());

  Request c5;
  c5.command = "seqcm";
  c5.edges = {"1-2,2-3,3-4,4-5,5-1"};
  pins.check("cli.seqcm-c5", std::string("true"), cli_json(c5).at("sequentially_cm").get<std::string>());
}

}  // namespace

Json regress(const Request&, bool& passed) {
  Pins pins;
  pins.group("c8", eight_cycle);
  pins.group("skew-lines", skew_lines);
  pins.group("structural", structural);
  pins.group("cycles", cycles);
  pins.group("att", attached);
  pins.group("probe", probe_pins);
  pins.group("rp2", field_dependence);
  pins.group("cli", command_line);
  passed = pins.failed == 0;
  Json j;
  j["field"] = "QQ, GF(2) for rp2.*";
  j["checks"] = pins.rows;
  j["passed"] = pins.rows.size() - pins.failed;
  j["failed"] = pins.failed;
  return j;
}

}  // namespace mdepth::cli
