#include "config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace fseries {

namespace {

using nlohmann::json;

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  throw engine_error("ConfigError", "field '" + field + "': " + why);
}

Rat rat_field(const json& j, const std::string& field) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
  bad_field(field, "rationals must be strings like \"-3/2\" or plain integers");
}

RatMat matrix_field(const json& j, const std::string& field, std::size_t* cols_out) {
  if (!j.is_array() || j.empty()) bad_field(field, "expected a nonempty array of rows");
  RatMat m;
  std::size_t cols = 0;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const json& row = j[r];
    const std::string where = field + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.empty()) bad_field(where, "expected a nonempty row");
    if (r == 0)
      cols = row.size();
    else if (row.size() != cols)
      bad_field(where, "row has " + std::to_string(row.size()) + " entries, expected " +
                           std::to_string(cols));
    RatVec out;
    for (std::size_t c = 0; c < row.size(); ++c)
      out.push_back(rat_field(row[c], where + "[" + std::to_string(c) + "]"));
    m.push_back(std::move(out));
  }
  if (cols_out) *cols_out = cols;
  return m;
}

}  // namespace

PairDoc pair_from_json(const std::string& json_text, const std::string& source_label) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw engine_error("ConfigError", std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw engine_error("ConfigError", "top level must be an object");

  if (!j.contains("schema") || !j["schema"].is_string()) bad_field("schema", "required string");
  const std::string schema = j["schema"].get<std::string>();
  if (schema != "fseries-pair/1")
    bad_field("schema", "unsupported value '" + schema + "', expected 'fseries-pair/1'");

  PairDoc doc;
  doc.source = source_label;
  if (j.contains("name")) {
    if (!j["name"].is_string()) bad_field("name", "must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("description")) {
    if (!j["description"].is_string()) bad_field("description", "must be a string");
    doc.description = j["description"].get<std::string>();
  }

  if (!j.contains("g") || !j["g"].is_object()) bad_field("g", "required object");
  const json& g = j["g"];
  RootSystem rs;
  if (g.contains("type")) {
    if (g.contains("cartan")) bad_field("g", "give either 'type' or 'cartan', not both");
    if (!g["type"].is_string()) bad_field("g.type", "must be a string like \"A2\"");
    doc.g_label = g["type"].get<std::string>();
    rs = root_system_of_type(doc.g_label);
  } else if (g.contains("cartan")) {
    std::size_t cols = 0;
    const RatMat m = matrix_field(g["cartan"], "g.cartan", &cols);
    if (cols != m.size()) bad_field("g.cartan", "must be square");
    std::vector<std::vector<Int>> cartan;
    for (std::size_t r = 0; r < m.size(); ++r) {
      std::vector<Int> row;
      for (std::size_t c = 0; c < cols; ++c) {
        if (denominator(m[r][c]) != 1)
          bad_field("g.cartan[" + std::to_string(r) + "][" + std::to_string(c) + "]",
                    "must be an integer");
        row.push_back(numerator(m[r][c]));
      }
      cartan.push_back(std::move(row));
    }
    doc.g_label = "custom";
    rs = build_root_system(cartan);
  } else {
    bad_field("g", "needs 'type' or 'cartan'");
  }

  if (!j.contains("embed")) bad_field("embed", "required matrix (rows = h coordinates)");
  std::size_t t_dim = 0;
  const RatMat embed = matrix_field(j["embed"], "embed", &t_dim);
  if (embed.size() != rs.rank)
    bad_field("embed", "has " + std::to_string(embed.size()) + " rows, expected rank(g) = " +
                           std::to_string(rs.rank));

  std::vector<Weight> k_roots;
  if (!j.contains("k_roots") || !j["k_roots"].is_array())
    bad_field("k_roots", "required array (may be empty for a torus)");
  const json& kr = j["k_roots"];
  for (std::size_t r = 0; r < kr.size(); ++r) {
    const std::string where = "k_roots[" + std::to_string(r) + "]";
    if (!kr[r].is_array()) bad_field(where, "expected a weight array");
    if (kr[r].size() != t_dim)
      bad_field(where, "has " + std::to_string(kr[r].size()) + " coordinates, expected dim t = " +
                           std::to_string(t_dim));
    Weight w;
    for (std::size_t c = 0; c < kr[r].size(); ++c)
      w.push_back(rat_field(kr[r][c], where + "[" + std::to_string(c) + "]"));
    k_roots.push_back(std::move(w));
  }

  doc.pair = build_pair(rs, embed, k_roots);
  return doc;
}

PairDoc pair_from_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw engine_error("IoError", "cannot read pair config '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return pair_from_json(buf.str(), path);
}

}  // namespace fseries
