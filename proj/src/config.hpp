// Pair configuration files: a small versioned JSON schema carrying the ambient
// root system, the embedding basis of t, and the simple k-roots. See
// docs/schema.md for the exact field list.
#pragma once

#include <string>

#include "pairspec.hpp"

namespace fseries {

struct PairDoc {
  std::string source;       // builtin name or file path the pair came from
  std::string name;         // config "name" field, may be empty
  std::string description;  // config "description" field, may be empty
  std::string g_label;      // type string when given, else "custom"
  ReductivePair pair;
};

// Parses and fully validates a pair document. engine_error kind ConfigError
// names the offending field; pair validation errors propagate unchanged.
PairDoc pair_from_json(const std::string& json_text, const std::string& source_label);

// Reads the file (IoError when unreadable) and delegates to pair_from_json.
PairDoc pair_from_file(const std::string& path);

}  // namespace fseries
