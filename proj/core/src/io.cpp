#include "mdepth/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <json.hpp>

#include "mdepth/error.hpp"

namespace mdepth {
namespace {

using nlohmann::json;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::size_t parse_count(std::string_view s, std::string_view what) {
  s = trim(s);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    raise(ErrorKind::MalformedInput, "expected a non-negative integer for " + std::string(what) + ", got '" +
                                         std::string(s) + "'");
  }
  return value;
}

/// (variable index, exponent) pairs of one monomial in `x1*x2^2` / `x1x2` form.
std::vector<std::pair<std::size_t, std::uint32_t>> parse_factors(std::string_view text) {
  std::vector<std::pair<std::size_t, std::uint32_t>> factors;
  std::size_t pos = 0;
  const auto digits = [&]() {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) raise(ErrorKind::MalformedInput, "expected digits in monomial '" + std::string(text) + "'");
    return parse_count(text.substr(start, pos - start), "an index or exponent");
  };
  while (pos < text.size()) {
    const char c = text[pos];
    if (c == '*' || std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c != 'x') raise(ErrorKind::MalformedInput, "unexpected '" + std::string(1, c) + "' in monomial '" + std::string(text) + "'");
    ++pos;
    const std::size_t index = digits();
    if (index == 0) raise(ErrorKind::MalformedInput, "variables are numbered from x1");
    std::uint32_t exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      exponent = static_cast<std::uint32_t>(digits());
    }
    factors.emplace_back(index - 1, exponent);
  }
  return factors;
}

std::string json_dump_error(const json::exception& e) { return std::string("invalid JSON: ") + e.what(); }

}  // namespace

FieldSpec parse_field(std::string_view text) {
  text = trim(text);
  if (text == "q" || text == "Q" || text == "QQ") return FieldSpec::rationals();
  if (text == "f2") return FieldSpec::prime(2);
  if (text.substr(0, 3) == "fp=") {
    const std::size_t p = parse_count(text.substr(3), "the field characteristic");
    if (p > 0xFFFFFFFFULL) raise(ErrorKind::MalformedInput, "field characteristic too large");
    return FieldSpec::prime(static_cast<std::uint32_t>(p));
  }
  raise(ErrorKind::MalformedInput, "unknown field '" + std::string(text) + "' (expected q, f2 or fp=P)");
}

MonomialIdeal parse_ideal_text(std::string_view text, std::optional<std::size_t> num_vars, FieldSpec field) {
  text = trim(text);
  std::vector<std::vector<std::pair<std::size_t, std::uint32_t>>> monomials;
  if (!(text.empty() || text == "0")) {
    for (std::string_view part : split(text, ',')) {
      part = trim(part);
      if (part.empty()) raise(ErrorKind::MalformedInput, "empty generator in '" + std::string(text) + "'");
      if (part == "1") {
        monomials.emplace_back();
        continue;
      }
      monomials.push_back(parse_factors(part));
    }
  }
  std::size_t largest = 0;
  for (const auto& m : monomials) {
    for (const auto& [index, e] : m) largest = std::max(largest, index + 1);
  }
  const std::size_t n = num_vars.value_or(largest);
  if (n == 0) raise(ErrorKind::MalformedInput, "cannot infer the number of variables; pass it explicitly");
  if (largest > n) {
    raise(ErrorKind::MalformedInput, "variable x" + std::to_string(largest) + " outside a ring of " +
                                         std::to_string(n) + " variables");
  }
  std::vector<Monomial> gens;
  for (const auto& m : monomials) {
    std::vector<Monomial::Exponent> exps(n, 0);
    for (const auto& [index, e] : m) exps[index] += e;
    gens.emplace_back(std::move(exps));
  }
  return MonomialIdeal(RingDescriptor::standard(n, field), std::move(gens));
}

MonomialIdeal parse_ideal_json(std::string_view text, FieldSpec field) {
  try {
    const json doc = json::parse(text);
    const auto names = doc.at("vars").get<std::vector<std::string>>();
    if (names.empty()) raise(ErrorKind::MalformedInput, "\"vars\" must list at least one variable");
    RingDescriptor ring(names, field);
    std::vector<Monomial> gens;
    for (const auto& row : doc.at("gens")) {
      auto exps = row.get<std::vector<std::int64_t>>();
      if (exps.size() != names.size()) raise(ErrorKind::MalformedInput, "generator length differs from \"vars\"");
      std::vector<Monomial::Exponent> e;
      for (auto v : exps) {
        if (v < 0 || v > 0xFFFF) raise(ErrorKind::MalformedInput, "exponent out of range");
        e.push_back(static_cast<Monomial::Exponent>(v));
      }
      gens.emplace_back(std::move(e));
    }
    return MonomialIdeal(std::move(ring), std::move(gens));
  } catch (const json::exception& e) {
    raise(ErrorKind::MalformedInput, json_dump_error(e));
  }
}

MonomialIdeal parse_edge_list(std::string_view text, FieldSpec field) {
  std::optional<std::size_t> n;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::string_view part : split(text, ';')) {
    part = trim(part);
    if (part.empty()) continue;
    const std::size_t eq = part.find('=');
    if (eq == std::string_view::npos) raise(ErrorKind::MalformedInput, "expected key=value in '" + std::string(part) + "'");
    const std::string_view key = trim(part.substr(0, eq));
    const std::string_view value = trim(part.substr(eq + 1));
    if (key == "n") {
      n = parse_count(value, "n");
    } else if (key == "edges") {
      if (value.empty()) continue;
      for (std::string_view e : split(value, ',')) {
        const auto ends = split(trim(e), '-');
        if (ends.size() != 2) raise(ErrorKind::MalformedInput, "edge '" + std::string(e) + "' is not of the form a-b");
        const std::size_t a = parse_count(ends[0], "an edge endpoint");
        const std::size_t b = parse_count(ends[1], "an edge endpoint");
        if (a == 0 || b == 0) raise(ErrorKind::MalformedInput, "graph vertices are numbered from 1");
        edges.emplace_back(a - 1, b - 1);
      }
    } else {
      raise(ErrorKind::MalformedInput, "unknown key '" + std::string(key) + "' in edge list");
    }
  }
  if (!n) raise(ErrorKind::MalformedInput, "edge list needs n=<vertex count>");
  return edge_ideal(*n, edges, field);
}

SimplicialComplex parse_facet_json(std::string_view text) {
  try {
    const json doc = json::parse(text);
    const auto n = doc.at("vertices").get<std::size_t>();
    std::vector<Face> facets;
    for (const auto& row : doc.at("facets")) {
      Face f;
      for (auto v : row.get<std::vector<std::size_t>>()) {
        if (v == 0 || v > n) raise(ErrorKind::MalformedInput, "facet vertex out of range");
        f = f.with(v - 1);
      }
      facets.push_back(f);
    }
    return SimplicialComplex(n, std::move(facets));
  } catch (const json::exception& e) {
    raise(ErrorKind::MalformedInput, json_dump_error(e));
  }
}

MonomialIdeal parse_input(std::string_view text, std::optional<std::size_t> num_vars, FieldSpec field) {
  const std::string_view body = trim(text);
  if (!body.empty() && body.front() == '{') {
    if (body.find("\"facets\"") != std::string_view::npos) {
      const SimplicialComplex complex = parse_facet_json(body);
      if (complex.ground_size() == 0) raise(ErrorKind::MalformedInput, "complex needs at least one vertex");
      return to_ideal(complex, RingDescriptor::standard(complex.ground_size(), field));
    }
    return parse_ideal_json(body, field);
  }
  if (body.find("edges") != std::string_view::npos) return parse_edge_list(body, field);
  return parse_ideal_text(body, num_vars, field);
}

MonomialIdeal edge_ideal(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                         FieldSpec field) {
  if (n == 0) raise(ErrorKind::MalformedInput, "a graph needs at least one vertex");
  std::vector<Monomial> gens;
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n) raise(ErrorKind::MalformedInput, "edge endpoint outside the vertex range");
    if (a == b) raise(ErrorKind::MalformedInput, "self-loops are not allowed");
    gens.push_back(Monomial::squarefree(n, VertexSet().with(a).with(b)));
  }
  return MonomialIdeal(RingDescriptor::standard(n, field), std::move(gens));
}

MonomialIdeal cycle_ideal(std::size_t n, FieldSpec field) {
  if (n < 3) raise(ErrorKind::MalformedInput, "cycles have at least 3 vertices");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return edge_ideal(n, edges, field);
}

std::string format_monomial(const Monomial& u, const RingDescriptor& ring) {
  if (u.is_one()) return "1";
  std::string out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (u[i] > 1) out += '^' + std::to_string(u[i]);
  }
  return out;
}

std::string format_ideal(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  for (const auto& g : ideal.gens()) {
    if (out.size() > 1) out += ", ";
    out += format_monomial(g, ideal.ring());
  }
  return out + ")";
}

std::string format_prime(PrimeSupport p, const RingDescriptor& ring) {
  if (p.vars.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t v : p.vars.elements()) {
    if (out.size() > 1) out += ',';
    out += ring.name(v);
  }
  return out + ")";
}

std::string format_face(Face face, const RingDescriptor& ring) {
  std::string out = "{";
  for (std::size_t v : face.elements()) {
    if (out.size() > 1) out += ',';
    out += ring.name(v);
  }
  return out + "}";
}

}  // namespace mdepth
