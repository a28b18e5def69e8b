#include "builtin_pairs.hpp"

#include <array>

namespace fseries {

namespace {

constexpr const char* kCartanInA1 = R"({
  "schema": "fseries-pair/1",
  "name": "cartan-in-a1",
  "description": "k is the Cartan subalgebra of sl(2); both root spaces land in k-perp.",
  "g": {"type": "A1"},
  "embed": [["1"]],
  "k_roots": []
}
)";

constexpr const char* kPrincipalA1InA2 = R"({
  "schema": "fseries-pair/1",
  "name": "principal-a1-in-a2",
  "description": "Principal sl(2) in sl(3): every simple root restricts to 2, the highest root to 4.",
  "g": {"type": "A2"},
  "embed": [["2"], ["2"]],
  "k_roots": [["2"]]
}
)";

constexpr const char* kDiagonalA1InA1xA1 = R"({
  "schema": "fseries-pair/1",
  "name": "diagonal-a1-in-a1xa1",
  "description": "Diagonal sl(2) in sl(2) x sl(2); k-perp is a second copy of the adjoint module.",
  "g": {"type": "A1xA1"},
  "embed": [["1"], ["1"]],
  "k_roots": [["2"]]
}
)";

struct Entry {
  const char* name;
  const char* text;
};

constexpr std::array<Entry, 3> kEntries = {{
    {"cartan-in-a1", kCartanInA1},
    {"principal-a1-in-a2", kPrincipalA1InA2},
    {"diagonal-a1-in-a1xa1", kDiagonalA1InA1xA1},
}};

}  // namespace

const std::vector<std::string>& builtin_pair_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& e : kEntries) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

const std::string& builtin_pair_json(const std::string& name) {
  static const std::array<std::string, kEntries.size()> texts = [] {
    std::array<std::string, kEntries.size()> out;
    for (std::size_t i = 0; i < kEntries.size(); ++i) out[i] = kEntries[i].text;
    return out;
  }();
  for (std::size_t i = 0; i < kEntries.size(); ++i)
    if (name == kEntries[i].name) return texts[i];
  std::string known;
  for (const auto& e : kEntries) {
    if (!known.empty()) known += ", ";
    known += e.name;
  }
  throw engine_error("ConfigError", "unknown builtin pair '" + name + "' (available: " + known + ")");
}

PairDoc builtin_pair(const std::string& name) {
  return pair_from_json(builtin_pair_json(name), "builtin:" + name);
}

}  // namespace fseries
