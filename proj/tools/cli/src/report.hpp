#pragma once

#include <string>

#include <json.hpp>

#include "mdepth/cli/app.hpp"
#include "mdepth/filtration.hpp"
#include "mdepth/invariants.hpp"

namespace mdepth::cli {

using Json = nlohmann::ordered_json;

Json primes_json(const std::vector<PrimeSupport>& primes, const RingDescriptor& ring);
Json profile_json(const ModuleProfile& profile);
Json filtration_json(const DimensionFiltration& filtration);
Json att_json(const AttReport& report, const RingDescriptor& ring);

/// Pretty JSON, or an aligned key/value table with one sub-table per array
/// of objects. Always ends with a newline.
std::string render(const Json& report, Format format);

}  // namespace mdepth::cli
