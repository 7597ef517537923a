#include <cstdio>
#include <iostream>

#include <CLI11.hpp>

#include "mdepth/cli/app.hpp"

int main(int argc, char** argv) {
  using namespace mdepth::cli;
  Request request;
  std::string format = "table";

  CLI::App app{"Depth, maximal depth and local cohomology of monomial quotients S/I"};
  app.add_option("command", request.command, "Command to run")->required()->check(CLI::IsMember(commands()));
  app.add_option("inputs", request.files, "Input files: ideal text, ideal JSON, facet JSON or edge list");
  app.add_option("--gens", request.gens, "Inline generators, e.g. \"x1*x2,x2^2*x3\" (repeatable)");
  app.add_option("--edges", request.edges, "Inline graph edges, e.g. \"1-2,2-3,3-1\" (repeatable)");
  app.add_option("--vars", request.vars, "Number of variables (default: largest index seen)");
  app.add_option("--field", request.field, "q | f2 | fp=P")->capture_default_str();
  app.add_option("--format", format, "table | json")->check(CLI::IsMember({"table", "json"}))->capture_default_str();
  app.add_option("--max-vertices", request.max_vertices, "Vertex cap")->capture_default_str();
  app.add_option("--search-cap", request.search_cap, "Enumeration cap")->capture_default_str();
  app.add_option("--seed", request.seed, "Probe seed")->capture_default_str();
  app.add_option("--samples", request.samples, "Probe sample count")->capture_default_str();
  app.add_option("--sample-min-vertices", request.sample_min_vertices, "Probe: fewest vertices")->capture_default_str();
  app.add_option("--sample-max-vertices", request.sample_max_vertices, "Probe: most vertices")->capture_default_str();
  app.add_option("--face", request.face, "localize: 1-based vertices, e.g. \"1,3\"");
  app.add_option("--degree", request.degree, "psupp: cohomological degree i");
  app.add_option("--quotient-var", request.quotient_var, "analyze: divide out x_v first (must be a nonzerodivisor)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: malformed-input: " << e.what() << '\n';
    return kExitMalformed;
  }
  request.format = format == "json" ? Format::Json : Format::Table;

  const Outcome outcome = run(request);
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}
