// The three pairs shipped with the tool, embedded as config documents so the
// binary works without any data files. The same documents live under pairs/.
#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace fseries {

const std::vector<std::string>& builtin_pair_names();

// Raw config text for a builtin; engine_error ConfigError for unknown names,
// listing what is available.
const std::string& builtin_pair_json(const std::string& name);

PairDoc builtin_pair(const std::string& name);

}  // namespace fseries
