#pragma once

#include "report.hpp"

namespace mdepth::cli {

/// Built-in regression pins. `passed` is false on any mismatch.
Json regress(const Request& request, bool& passed);

}  // namespace mdepth::cli
