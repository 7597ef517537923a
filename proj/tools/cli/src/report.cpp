#include "report.hpp"

#include <algorithm>
#include <sstream>

#include "mdepth/io.hpp"

namespace mdepth::cli {
namespace {

std::string scalar(const Json& v) {
  if (v.is_null()) return "-";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out = "[";
    for (const auto& item : v) {
      if (out.size() > 1) out += ", ";
      out += scalar(item);
    }
    return out + "]";
  }
  if (v.is_object()) return v.dump();
  return v.dump();
}

bool is_table(const Json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& r) { return r.is_object(); });
}

void render_table(const Json& rows, const std::string& indent, std::ostringstream& out) {
  std::vector<std::string> columns;
  for (const auto& row : rows) {
    for (const auto& [key, _] : row.items()) {
      if (std::find(columns.begin(), columns.end(), key) == columns.end()) columns.push_back(key);
    }
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& c : columns) width.push_back(c.size());
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      line.push_back(row.contains(columns[c]) ? scalar(row[columns[c]]) : "-");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  const auto emit = [&](const std::vector<std::string>& line) {
    std::string text = indent;
    for (std::size_t c = 0; c < line.size(); ++c) {
      text += line[c];
      if (c + 1 < line.size()) text += std::string(width[c] - line[c].size() + 2, ' ');
    }
    out << text << '\n';
  };
  emit(columns);
  for (const auto& line : cells) emit(line);
}

void render_object(const Json& obj, const std::string& indent, std::ostringstream& out) {
  std::size_t width = 0;
  for (const auto& [key, _] : obj.items()) width = std::max(width, key.size());
  for (const auto& [key, value] : obj.items()) {
    if (value.is_object()) {
      out << indent << key << '\n';
      render_object(value, indent + "  ", out);
    } else if (is_table(value)) {
      out << indent << key << '\n';
      render_table(value, indent + "  ", out);
    } else {
      out << indent << key << std::string(width - key.size() + 2, ' ') << scalar(value) << '\n';
    }
  }
}

Json interval_json(const std::optional<DepthInterval>& interval) {
  if (!interval) return nullptr;
  return Json::array({interval->lo, interval->hi});
}

}  // namespace

Json primes_json(const std::vector<PrimeSupport>& primes, const RingDescriptor& ring) {
  Json out = Json::array();
  for (PrimeSupport p : primes) out.push_back(format_prime(p, ring));
  return out;
}

Json profile_json(const ModuleProfile& p) {
  Json j;
  j["field"] = p.field().tag();
  j["vars"] = p.ring.size();
  if (p.summands.size() == 1) {
    j["ideal"] = format_ideal(p.summands.front());
  } else {
    Json summands = Json::array();
    for (const auto& s : p.summands) summands.push_back(format_ideal(s));
    j["summands"] = summands;
  }
  j["dim"] = p.dim;
  j["depth"] = p.depth;
  j["mdepth"] = p.mdepth;
  j["maximal_depth"] = p.flags.maximal_depth;
  j["cohen_macaulay"] = p.flags.cohen_macaulay;
  j["unmixed"] = p.flags.unmixed;
  j["generalized_cm"] = p.flags.generalized_cm;
  j["ass"] = primes_json(p.ass, p.ring);
  j["assd"] = primes_json(p.assd, p.ring);
  Json rows = Json::array();
  for (const auto& row : p.hochster.rows) {
    Json r;
    r["i"] = row.degree;
    r["nonzero"] = row.nonzero;
    r["finite_length"] = row.finite_length;
    if (row.k_dim) r["k_dim"] = *row.k_dim;
    rows.push_back(r);
  }
  j["h_table"] = rows;
  return j;
}

Json filtration_json(const DimensionFiltration& f) {
  const RingDescriptor& ring = f.base.ring();
  Json j;
  j["field"] = ring.field().tag();
  j["ideal"] = format_ideal(f.base);
  j["dim"] = f.dim;
  j["depth"] = f.depth;
  j["t"] = f.t;
  Json levels = Json::array();
  for (const auto& level : f.levels) {
    Json l;
    l["i"] = level.index;
    Json gens = Json::array();
    for (const auto& g : level.level_ideal.gens()) gens.push_back(format_monomial(g, ring));
    l["ideal_gens"] = gens;
    l["nonzero"] = level.nonzero;
    l["ass_i"] = primes_json(level.ass_level, ring);
    l["depth_interval"] = interval_json(level.depth_interval);
    l["quotient_depth_interval"] = interval_json(level.quotient_interval);
    levels.push_back(l);
  }
  j["levels"] = levels;
  Json chain = Json::array();
  for (const auto& v : mdepth_chain(f)) chain.push_back(Json{{"i", v.index}, {"mdepth", v.value}});
  j["mdepth_chain"] = chain;
  j["sequentially_cm"] = std::string(to_string(seqcm_from_filtration(f)));
  return j;
}

Json att_json(const AttReport& report, const RingDescriptor& ring) {
  Json j;
  j["field"] = ring.field().tag();
  j["hypothesis_reading"] = kAttHypothesisReading;
  j["hypothesis_alternative"] = kAttHypothesisAlternative;
  j["dim"] = report.dim;
  j["depth"] = report.depth;
  j["depth_hypothesis_holds"] = report.depth_hypothesis_holds;
  j["sequentially_cm"] = std::string(to_string(report.sequentially_cm));
  Json degrees = Json::array();
  for (const auto& d : report.degrees) {
    for (const auto& claim : d.claims) {
      Json r;
      r["i"] = d.degree;
      r["ass_i"] = primes_json(d.lower_bound, ring);
      r["justification"] = std::string(to_string(claim.justification));
      r["claim"] = claim.justification == AttJustification::DepthMinAtt      ? "min-att-equals"
                   : claim.justification == AttJustification::LowerBoundOnly ? "att-contains"
                                                                              : "att-equals";
      r["primes"] = primes_json(claim.primes, ring);
      degrees.push_back(r);
    }
  }
  j["degrees"] = degrees;
  return j;
}

std::string render(const Json& report, Format format) {
  if (format == Format::Json) return report.dump(2) + "\n";
  std::ostringstream out;
  render_object(report, "", out);
  return out.str();
}

}  // namespace mdepth::cli
