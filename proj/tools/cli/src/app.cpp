#include "mdepth/cli/app.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "mdepth/decomposition.hpp"
#include "mdepth/error.hpp"
#include "mdepth/filtration.hpp"
#include "mdepth/invariants.hpp"
#include "mdepth/io.hpp"
#include "regress.hpp"
#include "report.hpp"

namespace mdepth::cli {
namespace {

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedInput:
    case ErrorKind::EmptyInput:
      return kExitMalformed;
    case ErrorKind::CapExceeded:
      return kExitCapExceeded;
    case ErrorKind::RingMismatch:
    case ErrorKind::UndefinedModule:
    case ErrorKind::RegularityViolation:
    case ErrorKind::SquarefreeRequired:
    case ErrorKind::NotAFace:
    case ErrorKind::OutOfRange:
      return kExitPrecondition;
    case ErrorKind::Internal:
      return kExitFailure;
  }
  return kExitFailure;
}

std::string one_line(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorKind::MalformedInput, "cannot read input file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// Inline `1-2,2-3` gets n from --vars or the largest endpoint.
std::string edge_text(const std::string& inline_edges, std::optional<std::size_t> vars) {
  if (inline_edges.find("edges") != std::string::npos) return inline_edges;
  std::size_t n = 0;
  std::size_t current = 0;
  bool in_number = false;
  for (char c : inline_edges + ",") {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      current = current * 10 + static_cast<std::size_t>(c - '0');
      in_number = true;
    } else if (in_number) {
      n = std::max(n, current);
      current = 0;
      in_number = false;
    }
  }
  return "n=" + std::to_string(vars.value_or(n)) + "; edges=" + inline_edges;
}

std::vector<MonomialIdeal> inputs(const Request& r, FieldSpec field) {
  std::vector<MonomialIdeal> out;
  for (const auto& path : r.files) out.push_back(parse_input(read_file(path), r.vars, field));
  for (const auto& text : r.gens) out.push_back(parse_ideal_text(text, r.vars, field));
  for (const auto& text : r.edges) out.push_back(parse_edge_list(edge_text(text, r.vars), field));
  return out;
}

MonomialIdeal single_input(const Request& r, FieldSpec field) {
  auto all = inputs(r, field);
  if (all.size() != 1) {
    raise(ErrorKind::MalformedInput, "'" + r.command + "' takes exactly one input, got " + std::to_string(all.size()));
  }
  return std::move(all.front());
}

Face parse_face(const std::string& text, std::size_t n) {
  Face face;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty()) continue;
    if (!std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); }) || item.size() > 6) {
      raise(ErrorKind::MalformedInput, "face entry '" + item + "' is not a vertex number");
    }
    const std::size_t v = std::stoul(item);
    if (v == 0 || v > n) raise(ErrorKind::MalformedInput, "face vertex " + item + " outside 1.." + std::to_string(n));
    face = face.with(v - 1);
  }
  return face;
}

Json analyze(const Request& r, FieldSpec field, const Limits& limits) {
  MonomialIdeal ideal = single_input(r, field);
  if (r.quotient_var) {
    if (*r.quotient_var == 0 || *r.quotient_var > ideal.num_vars()) {
      raise(ErrorKind::MalformedInput, "--quotient-var outside 1.." + std::to_string(ideal.num_vars()));
    }
    ideal = quotient_by_variable(ideal, *r.quotient_var - 1, limits);
  }
  return profile_json(profile(ideal, limits));
}

Json seqcm(const Request& r, FieldSpec field, const Limits& limits) {
  const MonomialIdeal ideal = single_input(r, field);
  const SeqCmResult result = is_sequentially_cm(ideal, limits);
  Json j;
  j["field"] = field.tag();
  j["ideal"] = format_ideal(ideal);
  j["sequentially_cm"] = std::string(to_string(result.verdict));
  if (result.witness) {
    j["witness"] = Json{{"skeleton_dim", result.witness->skeleton_dim},
                        {"face", format_face(result.witness->face, ideal.ring())},
                        {"homology_degree", result.witness->homology_degree}};
  }
  j["filtration_verdict"] = std::string(to_string(seqcm_from_filtration(dimension_filtration(ideal, limits))));
  return j;
}

Json psupp(const Request& r, FieldSpec field, const Limits& limits) {
  if (!r.degree) raise(ErrorKind::MalformedInput, "psupp needs --degree");
  const MonomialIdeal ideal = single_input(r, field);
  Json faces = Json::array();
  for (Face f : psupp_monomial(ideal, *r.degree, limits)) faces.push_back(format_face(f, ideal.ring()));
  Json j;
  j["field"] = field.tag();
  j["ideal"] = format_ideal(ideal);
  j["degree"] = *r.degree;
  j["faces"] = faces;
  return j;
}

Json summary(const ModuleProfile& p) {
  return Json{{"ideal", format_ideal(p.summands.front())}, {"vars", p.ring.size()}, {"dim", p.dim},
              {"depth", p.depth}, {"mdepth", p.mdepth}, {"maximal_depth", p.flags.maximal_depth}};
}

Json tensor(const Request& r, FieldSpec field, const Limits& limits) {
  const auto all = inputs(r, field);
  if (all.size() != 2) raise(ErrorKind::MalformedInput, "tensor takes exactly two inputs, got " + std::to_string(all.size()));
  const ModuleProfile left = profile(all[0], limits);
  const ModuleProfile right = profile(all[1], limits);
  const ModuleProfile joined = profile(tensor_join(all[0], all[1]), limits);
  Json j;
  j["field"] = field.tag();
  j["left"] = summary(left);
  j["right"] = summary(right);
  j["join"] = summary(joined);
  j["ass_join"] = primes_json(joined.ass, joined.ring);
  j["depth_additive"] = joined.depth == left.depth + right.depth;
  j["maximal_depth_iff_both"] =
      joined.flags.maximal_depth == (left.flags.maximal_depth && right.flags.maximal_depth);
  return j;
}

Json polarization(const Request& r, FieldSpec field, const Limits& limits) {
  const MonomialIdeal ideal = single_input(r, field);
  const Polarization pol = polarize(ideal);
  Json j;
  j["field"] = field.tag();
  j["ideal"] = format_ideal(ideal);
  j["polarized"] = format_ideal(pol.ideal);
  j["vars"] = ideal.num_vars();
  j["added_vars"] = pol.added_vars;
  Json origin = Json::array();
  for (std::size_t v = 0; v < pol.origin.size(); ++v) {
    origin.push_back(Json{{"var", pol.ideal.ring().name(v)}, {"origin", ideal.ring().name(pol.origin[v])}});
  }
  j["origin"] = origin;
  const std::size_t polarized_depth = depth(pol.ideal, limits);
  j["depth_polarized"] = polarized_depth;
  j["depth"] = polarized_depth - pol.added_vars;
  return j;
}

Json localize(const Request& r, FieldSpec field, const Limits& limits) {
  if (!r.face) raise(ErrorKind::MalformedInput, "localize needs --face");
  const MonomialIdeal ideal = single_input(r, field);
  const Face face = parse_face(*r.face, ideal.num_vars());
  const LocalizationProfile loc = localization_profile(ideal, face, limits);
  Json j;
  j["field"] = field.tag();
  j["ideal"] = format_ideal(ideal);
  j["face"] = format_face(face, ideal.ring());
  j["face_size"] = loc.face_size;
  j["contains_assd_prime"] = loc.contains_assd_prime;
  j["localization"] = profile_json(loc.profile);
  return j;
}

Json directsum(const Request& r, FieldSpec field, const Limits& limits) {
  const auto all = inputs(r, field);
  if (all.empty()) raise(ErrorKind::EmptyInput, "directsum needs at least one summand");
  std::vector<ModuleProfile> parts;
  for (const auto& ideal : all) parts.push_back(profile(ideal, limits));
  const ModuleProfile sum = direct_sum_profile(parts);
  Json summands = Json::array();
  for (const auto& p : parts) summands.push_back(summary(p));
  Json j = profile_json(sum);
  j["summand_profiles"] = summands;
  j["summand_rule"] = direct_sum_rule(parts);
  return j;
}

Json probe(const Request& r, FieldSpec field, const Limits& limits) {
  const ProbeConfig config{r.seed, r.samples, r.sample_min_vertices, r.sample_max_vertices};
  const ProbeReport report = probe_open_question(config, field, limits);
  Json hits = Json::array();
  for (const auto& hit : report.hits) {
    hits.push_back(Json{{"ideal", format_ideal(hit.ideal)}, {"vars", hit.ideal.num_vars()}, {"i", hit.degree},
                        {"k_dim", hit.k_dim}, {"depth", hit.depth}, {"dim", hit.dim},
                        {"sequentially_cm", hit.sequentially_cm}});
  }
  Json j;
  j["field"] = field.tag();
  j["seed"] = config.seed;
  j["samples"] = config.samples;
  j["vertices"] = Json::array({config.min_vertices, config.max_vertices});
  j["eligible"] = report.eligible;
  j["hit_count"] = report.hits.size();
  j["hits"] = hits;
  return j;
}

}  // namespace

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {"analyze", "filtration", "seqcm",     "att",   "psupp", "tensor",
                                                 "polarize", "localize",  "directsum", "probe", "regress"};
  return names;
}

Outcome run(const Request& r) {
  Outcome outcome;
  try {
    const FieldSpec field = parse_field(r.field);
    const Limits limits{r.max_vertices, r.search_cap};
    Json report;
    const std::string& c = r.command;
    if (c == "analyze") {
      report = analyze(r, field, limits);
    } else if (c == "filtration") {
      report = filtration_json(dimension_filtration(single_input(r, field), limits));
    } else if (c == "seqcm") {
      report = seqcm(r, field, limits);
    } else if (c == "att") {
      const MonomialIdeal ideal = single_input(r, field);
      report = att_json(att_report(ideal, limits), ideal.ring());
      if (ideal.is_squarefree()) {
        report["note"] = "squarefree input: the hypothesis holds exactly when S/I is Cohen-Macaulay";
      }
    } else if (c == "psupp") {
      report = psupp(r, field, limits);
    } else if (c == "tensor") {
      report = tensor(r, field, limits);
    } else if (c == "polarize") {
      report = polarization(r, field, limits);
    } else if (c == "localize") {
      report = localize(r, field, limits);
    } else if (c == "directsum") {
      report = directsum(r, field, limits);
    } else if (c == "probe") {
      report = probe(r, field, limits);
    } else if (c == "regress") {
      bool passed = false;
      report = regress(r, passed);
      outcome.out = render(report, r.format);
      if (!passed) {
        outcome.exit_code = kExitFailure;
        outcome.err = "error: regression-mismatch: at least one pinned value differs\n";
      }
      return outcome;
    } else {
      raise(ErrorKind::MalformedInput, "unknown command '" + c + "'");
    }
    if (field.characteristic == 2 && report.is_object()) {
      report["warning"] = "characteristic 2: Cohen-Macaulay type properties depend on the characteristic";
    }
    outcome.out = render(report, r.format);
  } catch (const Error& e) {
    outcome = Outcome{exit_code(e.kind()), "", "error: " + std::string(to_string(e.kind())) + ": " + one_line(e.what()) + "\n"};
  } catch (const std::exception& e) {
    outcome = Outcome{kExitFailure, "", "error: internal: " + one_line(e.what()) + "\n"};
  }
  return outcome;
}

}  // namespace mdepth::cli
