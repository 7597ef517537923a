#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mdepth::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitMalformed = 2;
inline constexpr int kExitCapExceeded = 3;
inline constexpr int kExitPrecondition = 4;

enum class Format { Table, Json };

/// One invocation. Inputs are read in the order files, `gens`, `edges`.
struct Request {
  std::string command;
  std::vector<std::string> files;
  std::vector<std::string> gens;
  std::vector<std::string> edges;
  std::string field = "q";
  Format format = Format::Table;
  std::optional<std::size_t> vars;

  std::size_t max_vertices = 24;
  std::uint64_t search_cap = std::uint64_t{1} << 24;
  std::uint64_t seed = 1;
  std::size_t samples = 200;
  std::size_t sample_min_vertices = 3;
  std::size_t sample_max_vertices = 9;

  /// 1-based comma list, for `localize`.
  std::optional<std::string> face;
  /// Cohomological degree, for `psupp`.
  std::optional<std::size_t> degree;
  /// 1-based variable to divide out before `analyze`.
  std::optional<std::size_t> quotient_var;
};

struct Outcome {
  int exit_code = kExitOk;
  std::string out;
  /// One line, "error: <tag>: <message>", when exit_code != 0.
  std::string err;
};

const std::vector<std::string>& commands();

Outcome run(const Request& request);

}  // namespace mdepth::cli
