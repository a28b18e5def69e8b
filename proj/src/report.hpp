// Rendering and verification reports. Text output is built deterministically
// (byte-identical for identical inputs); JSON output is a single document with
// the field layout documented in docs/schema.md.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "config.hpp"
#include "multengine.hpp"

namespace fseries {

struct RunSettings {
  Weight mu;
  std::optional<Weight> kappa;  // nullopt: canonical lift
  Rat cutoff;
  std::vector<std::size_t> tiebreak;  // empty: identity order
};

struct Verdict {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyOutcome {
  std::vector<Verdict> checks;
  std::vector<std::string> warnings;
  bool overall = false;
};

std::string render_describe_text(const PairDoc& doc);
std::string render_describe_json(const PairDoc& doc);

std::string render_parabolic_text(const PairDoc& doc, const Weight& mu,
                                  const std::vector<std::size_t>& tiebreak,
                                  const CompatibleParabolic& parab);
std::string render_parabolic_json(const PairDoc& doc, const Weight& mu,
                                  const std::vector<std::size_t>& tiebreak,
                                  const CompatibleParabolic& parab);

// The three headline verdicts printed under every table: the minimal type
// appears only in the top degree, with multiplicity exactly dim E, and every
// other row sits strictly above it in the norm order.
std::vector<Verdict> table_verdicts(const ReductivePair& pair,
                                      const CompatibleParabolic& parab, const EModule& e,
                                      const KTypeTable& table, const Weight& mu);
bool all_pass(const std::vector<Verdict>& v);

std::string render_table_text(const PairDoc& doc, const RunSettings& run,
                              const CompatibleParabolic& parab, const EModule& e,
                              const KTypeTable& table, const std::vector<Verdict>& verdicts);
std::string render_table_json(const PairDoc& doc, const RunSettings& run,
                              const CompatibleParabolic& parab, const EModule& e,
                              const KTypeTable& table, const std::vector<Verdict>& verdicts);

// The full check battery: pair invariants, parabolic split, inducing module,
// the three headline verdicts, the character-level oracles, the occurrence
// bound, and a byte-stability run. One Verdict per check, fixed names.
VerifyOutcome run_verify(const PairDoc& doc, const RunSettings& run);

std::string render_verify_text(const PairDoc& doc, const RunSettings& run, const EModule& e,
                               const VerifyOutcome& outcome);
std::string render_verify_json(const PairDoc& doc, const RunSettings& run, const EModule& e,
                               const VerifyOutcome& outcome);

}  // namespace fseries
