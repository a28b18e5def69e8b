#include "fseries/fseries.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "builtin_pairs.hpp"
#include "config.hpp"
#include "parabolic.hpp"
#include "report.hpp"

using namespace fseries;

struct fs_pair {
  PairDoc doc;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_error_kind;

void clear_error() {
  g_error.clear();
  g_error_kind.clear();
}

void set_error(const std::string& kind, const std::string& what) {
  g_error_kind = kind;
  g_error = what;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

fs_pair* load_guarded(const char* arg, PairDoc (*loader)(const std::string&)) {
  clear_error();
  if (!arg) {
    set_error("ConfigError", "null argument");
    return nullptr;
  }
  try {
    return new fs_pair{loader(arg)};
  } catch (const engine_error& e) {
    set_error(e.kind(), e.what());
  } catch (const std::exception& e) {
    set_error("Internal", e.what());
  }
  return nullptr;
}

Weight parse_weight_csv(const std::string& csv, std::size_t expect_dim,
                        const std::string& what) {
  Weight w;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = csv.find(',', start);
    const std::string piece = csv.substr(start, comma - start);
    if (piece.empty())
      throw engine_error("ConfigError", what + ": empty coordinate in '" + csv + "'");
    w.push_back(parse_rat(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (w.size() != expect_dim)
    throw engine_error("ConfigError", what + " has " + std::to_string(w.size()) +
                                          " coordinates, expected " +
                                          std::to_string(expect_dim));
  return w;
}

std::vector<std::size_t> parse_tiebreak(const char* csv, std::size_t dim) {
  if (!csv || !*csv) return {};
  std::vector<std::size_t> out;
  const std::string s = csv;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = s.find(',', start);
    const std::string piece = s.substr(start, comma - start);
    const Int v = parse_int(piece);
    if (v < 0 || v >= Int(dim))
      throw engine_error("ConfigError", "tiebreak index " + piece + " out of range 0.." +
                                            std::to_string(dim - 1));
    out.push_back(v.convert_to<std::size_t>());
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

bool is_auto(const char* s) { return !s || !*s || std::strcmp(s, "auto") == 0; }

enum class Format { kText, kJson };

int parse_format(const char* format, Format* out) {
  if (!format) return 2;
  if (std::strcmp(format, "text") == 0) {
    *out = Format::kText;
    return 0;
  }
  if (std::strcmp(format, "json") == 0) {
    *out = Format::kJson;
    return 0;
  }
  return 2;
}

// Shared front matter for the report-producing entry points. Returns 0 when
// the pipeline may proceed.
int begin_call(const fs_pair* pair, const char* format, char** out, Format* fmt) {
  if (out) *out = nullptr;
  if (!pair || !out) return 2;
  clear_error();
  if (parse_format(format, fmt) != 0) {
    set_error("ConfigError",
              std::string("unknown format '") + (format ? format : "(null)") +
                  "', expected text or json");
    return 2;
  }
  return 0;
}

struct TableRun {
  RunSettings run;
  CompatibleParabolic parab;
  EModule e;
  KTypeTable table;
  std::vector<Verdict> verdicts;
};

TableRun build_table_run(const PairDoc& doc, const char* mu, const char* kappa,
                         const char* cutoff, const char* tiebreak) {
  TableRun tr;
  if (!mu) throw engine_error("ConfigError", "mu is required");
  tr.run.mu = parse_weight_csv(mu, doc.pair.t_dim, "mu");
  tr.run.tiebreak = parse_tiebreak(tiebreak, doc.pair.t_dim);
  const auto lex = lex_functional(doc.pair, tr.run.mu, tr.run.tiebreak);
  tr.parab = build_parabolic(doc.pair, lex);
  if (is_auto(kappa)) {
    tr.run.kappa.reset();
  } else {
    tr.run.kappa = parse_weight_csv(kappa, doc.pair.g.rank, "kappa");
  }
  const Weight kap =
      tr.run.kappa ? *tr.run.kappa : auto_kappa(doc.pair, tr.parab, tr.run.mu);
  tr.e = validate_E(doc.pair, tr.parab, tr.run.mu, kap);
  if (is_auto(cutoff)) {
    tr.run.cutoff = 16 * vogan_norm_sq(doc.pair, tr.run.mu) + 16;
  } else {
    tr.run.cutoff = parse_rat(cutoff);
    if (tr.run.cutoff < 0)
      throw engine_error("ConfigError", "cutoff must be nonnegative, got " +
                                            rat_str(tr.run.cutoff));
  }
  tr.table = enumerate_ktypes(doc.pair, tr.parab, tr.e, tr.run.mu, tr.run.cutoff);
  tr.verdicts = table_verdicts(doc.pair, tr.parab, tr.e, tr.table, tr.run.mu);
  return tr;
}

}  // namespace

extern "C" {

fs_pair* fs_pair_builtin(const char* name) {
  return load_guarded(name, +[](const std::string& s) { return builtin_pair(s); });
}

fs_pair* fs_pair_load_file(const char* path) {
  return load_guarded(path, +[](const std::string& s) { return pair_from_file(s); });
}

fs_pair* fs_pair_load_json(const char* json_text) {
  return load_guarded(json_text, +[](const std::string& s) {
    return pair_from_json(s, "inline");
  });
}

void fs_pair_free(fs_pair* pair) { delete pair; }

char* fs_builtin_names(void) {
  std::string all;
  for (const auto& n : builtin_pair_names()) {
    all += n;
    all += "\n";
  }
  return dup_string(all);
}

const char* fs_last_error(void) { return g_error.c_str(); }
const char* fs_last_error_kind(void) { return g_error_kind.c_str(); }

int fs_describe(const fs_pair* pair, const char* format, char** out) {
  Format fmt;
  if (const int rc = begin_call(pair, format, out, &fmt)) return rc;
  try {
    *out = dup_string(fmt == Format::kText ? render_describe_text(pair->doc)
                                           : render_describe_json(pair->doc));
    return 0;
  } catch (const engine_error& e) {
    set_error(e.kind(), e.what());
  } catch (const std::exception& e) {
    set_error("Internal", e.what());
  }
  return 1;
}

int fs_parabolic(const fs_pair* pair, const char* mu, const char* tiebreak,
                 const char* format, char** out) {
  Format fmt;
  if (const int rc = begin_call(pair, format, out, &fmt)) return rc;
  try {
    if (!mu) throw engine_error("ConfigError", "mu is required");
    const Weight mu_w = parse_weight_csv(mu, pair->doc.pair.t_dim, "mu");
    const auto tb = parse_tiebreak(tiebreak, pair->doc.pair.t_dim);
    const auto lex = lex_functional(pair->doc.pair, mu_w, tb);
    const auto parab = build_parabolic(pair->doc.pair, lex);
    *out = dup_string(fmt == Format::kText
                          ? render_parabolic_text(pair->doc, mu_w, tb, parab)
                          : render_parabolic_json(pair->doc, mu_w, tb, parab));
    return 0;
  } catch (const engine_error& e) {
    set_error(e.kind(), e.what());
  } catch (const std::exception& e) {
    set_error("Internal", e.what());
  }
  return 1;
}

int fs_table(const fs_pair* pair, const char* mu, const char* kappa, const char* cutoff,
             const char* tiebreak, const char* format, char** out) {
  Format fmt;
  if (const int rc = begin_call(pair, format, out, &fmt)) return rc;
  try {
    const TableRun tr = build_table_run(pair->doc, mu, kappa, cutoff, tiebreak);
    *out = dup_string(
        fmt == Format::kText
            ? render_table_text(pair->doc, tr.run, tr.parab, tr.e, tr.table, tr.verdicts)
            : render_table_json(pair->doc, tr.run, tr.parab, tr.e, tr.table, tr.verdicts));
    return all_pass(tr.verdicts) ? 0 : 1;
  } catch (const engine_error& e) {
    set_error(e.kind(), e.what());
  } catch (const std::exception& e) {
    set_error("Internal", e.what());
  }
  return 1;
}

int fs_verify(const fs_pair* pair, const char* mu, const char* kappa, const char* cutoff,
              const char* tiebreak, const char* format, char** out) {
  Format fmt;
  if (const int rc = begin_call(pair, format, out, &fmt)) return rc;
  try {
    const TableRun tr = build_table_run(pair->doc, mu, kappa, cutoff, tiebreak);
    const VerifyOutcome outcome = run_verify(pair->doc, tr.run);
    *out = dup_string(fmt == Format::kText
                          ? render_verify_text(pair->doc, tr.run, tr.e, outcome)
                          : render_verify_json(pair->doc, tr.run, tr.e, outcome));
    return outcome.overall ? 0 : 1;
  } catch (const engine_error& e) {
    set_error(e.kind(), e.what());
  } catch (const std::exception& e) {
    set_error("Internal", e.what());
  }
  return 1;
}

void fs_string_free(char* s) { std::free(s); }

}  // extern "C"
