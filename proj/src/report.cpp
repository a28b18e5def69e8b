#include "report.hpp"

#include <json.hpp>

#include "cohomology.hpp"
#include "parabolic.hpp"

namespace fseries {

namespace {

using nlohmann::json;

std::string int_str(const Int& n) { return n.str(); }

std::string mset_str(const WeightMultiset& f) {
  if (f.empty()) return "{}";
  std::string s = "{ ";
  bool first = true;
  for (const auto& [w, m] : f) {
    if (!first) s += ", ";
    first = false;
    s += weight_str(w) + ":" + int_str(m);
  }
  return s + " }";
}

std::string weights_line(const std::vector<Weight>& ws) {
  if (ws.empty()) return "none";
  std::string s;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (i) s += ", ";
    s += weight_str(ws[i]);
  }
  return s;
}

std::string matrix_block(const RatMat& m) {
  std::string s;
  for (const auto& row : m) {
    s += "  [";
    for (const auto& x : row) s += " " + rat_str(x);
    s += " ]\n";
  }
  return s;
}

std::string tiebreak_str(const std::vector<std::size_t>& tb) {
  if (tb.empty()) return "identity";
  std::string s;
  for (std::size_t i = 0; i < tb.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(tb[i]);
  }
  return s;
}

std::string pair_header(const PairDoc& doc) {
  std::string s = "pair: " + doc.source + "\n";
  if (!doc.name.empty() && doc.name != doc.source) s += "name: " + doc.name + "\n";
  return s;
}

json rat_j(const Rat& r) {
  return json::array({numerator(r).str(), denominator(r).str()});
}

json int_j(const Int& n) { return json(n.str()); }

json weight_j(const Weight& w) {
  json a = json::array();
  for (const auto& x : w) a.push_back(rat_j(x));
  return a;
}

json wlist_j(const std::vector<Weight>& ws) {
  json a = json::array();
  for (const auto& w : ws) a.push_back(weight_j(w));
  return a;
}

json mat_j(const RatMat& m) {
  json a = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& x : row) r.push_back(rat_j(x));
    a.push_back(r);
  }
  return a;
}

json mset_j(const WeightMultiset& f) {
  json a = json::array();
  for (const auto& [w, m] : f) a.push_back(json{{"weight", weight_j(w)}, {"count", int_j(m)}});
  return a;
}

json pair_j(const PairDoc& doc) {
  const ReductivePair& p = doc.pair;
  json j;
  j["source"] = doc.source;
  j["name"] = doc.name;
  j["description"] = doc.description;
  j["g_label"] = doc.g_label;
  j["rank"] = int_j(Int(p.g.rank));
  j["positive_roots"] = int_j(Int(p.g.positive_roots.size()));
  j["t_dim"] = int_j(Int(p.t_dim));
  j["restriction"] = mat_j(p.restriction);
  j["t_form"] = mat_j(p.t_form);
  j["k_simple"] = wlist_j(p.k_simple);
  j["k_positive"] = wlist_j(p.k_positive);
  j["rho"] = weight_j(p.rho_k);
  j["weyl_order"] = int_j(Int(k_weyl_group(p).size()));
  j["chi_g"] = mset_j(p.chi_t_g);
  j["chi_k"] = mset_j(p.chi_t_k);
  j["chi_perp"] = mset_j(p.chi_t_perp);
  return j;
}

json parab_j(const CompatibleParabolic& parab, const std::vector<std::size_t>& tiebreak) {
  json j;
  json rows = json::array();
  for (const auto& r : parab.lex.rows) rows.push_back(weight_j(r));
  j["lex_rows"] = rows;
  json tb = json::array();
  for (const auto& t : tiebreak) tb.push_back(t);
  j["tiebreak"] = tb;
  j["n"] = mset_j(parab.n_weights);
  j["m"] = mset_j(parab.m_weights);
  j["n_cap_k"] = mset_j(parab.n_cap_k);
  j["n_cap_perp"] = mset_j(parab.n_cap_perp);
  j["s"] = int_j(parab.s);
  j["rho_n"] = weight_j(parab.rho_n);
  j["rho_n_perp"] = weight_j(parab.rho_n_perp);
  j["levi_positive"] = wlist_j(parab.levi_positive);
  j["levi_simple"] = wlist_j(levi_simple_roots(parab));
  return j;
}

json module_j(const EModule& e, bool is_auto) {
  json j;
  j["kappa"] = weight_j(e.kappa);
  j["kappa_auto"] = is_auto;
  j["omega"] = weight_j(e.omega);
  j["dim"] = int_j(e.dim_e);
  return j;
}

json verdicts_j(const std::vector<Verdict>& vs) {
  json a = json::array();
  for (const auto& v : vs)
    a.push_back(json{{"name", v.name}, {"pass", v.pass}, {"detail", v.detail}});
  return a;
}

std::string verdict_line(const Verdict& v) {
  std::string s = v.name + ": " + (v.pass ? "PASS" : "FAIL");
  if (!v.detail.empty()) s += " (" + v.detail + ")";
  return s;
}

std::string table_grid(const KTypeTable& table, const Weight& mu) {
  const std::vector<std::string> header = {"delta", "chi", "bound_top", "norm", "growth"};
  std::vector<std::vector<std::string>> cells;
  cells.push_back(header);
  for (const auto& r : table.rows) {
    const std::string growth =
        r.delta == mu ? "min" : (r.norm_growth_ok ? "up" : "VIOLATION");
    cells.push_back({weight_str(r.delta), int_str(r.chi), int_str(r.bound_top),
                     rat_str(r.vogan_norm), growth});
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::string out;
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::string cell = row[c];
      if (c == 0)
        cell += std::string(width[c] - cell.size(), ' ');
      else
        cell = std::string(width[c] - cell.size(), ' ') + cell;
      out += cell;
      out += (c + 1 == row.size()) ? "\n" : "  ";
    }
  }
  return out;
}

std::string run_header(const PairDoc& doc, const RunSettings& run, const EModule& e) {
  std::string s = pair_header(doc);
  s += "mu: " + weight_str(run.mu) + "\n";
  s += "kappa: " + weight_str(e.kappa) + (run.kappa ? " [explicit]" : " [auto]") + "\n";
  s += "cutoff: " + rat_str(run.cutoff) + "\n";
  s += "tiebreak: " + tiebreak_str(run.tiebreak) + "\n";
  return s;
}

json run_j(const RunSettings& run) {
  json j;
  j["mu"] = weight_j(run.mu);
  j["kappa_auto"] = !run.kappa.has_value();
  j["cutoff"] = rat_j(run.cutoff);
  json tb = json::array();
  for (const auto& t : run.tiebreak) tb.push_back(t);
  j["tiebreak"] = tb;
  return j;
}

Verdict check_top_degree(const ReductivePair& pair, const CompatibleParabolic& parab,
                         const EModule& e, const Weight& mu) {
  Verdict v{"top-degree-vanishing", true,
            "the minimal type never occurs below the top degree"};
  int max_len = 0;
  for (const auto& w : k_weyl_group(pair)) max_len = std::max(max_len, w.length());
  for (int i = 1; i <= max_len; ++i) {
    const auto hits = occurrence_witnesses(pair, parab, e, mu, i);
    if (!hits.empty()) {
      std::string word = "[";
      for (std::size_t j = 0; j < hits[0].w.word.size(); ++j) {
        if (j) word += " ";
        word += std::to_string(hits[0].w.word[j]);
      }
      word += "]";
      v.pass = false;
      v.detail = "occurrence at degree offset " + std::to_string(i) + ", word " + word;
      return v;
    }
  }
  return v;
}

Verdict check_min_type(const ReductivePair& pair, const CompatibleParabolic& parab,
                       const EModule& e, const Weight& mu) {
  const Int chi = euler_multiplicity(pair, parab, e, mu);
  Verdict v;
  v.name = "min-type-multiplicity";
  v.pass = (chi == e.dim_e);
  v.detail = "chi at mu = " + int_str(chi) + ", dim E = " + int_str(e.dim_e);
  return v;
}

Verdict check_norm_growth(const ReductivePair& pair, const KTypeTable& table,
                          const Weight& mu) {
  Verdict v;
  v.name = "vogan-norm-growth";
  v.pass = true;
  Int above = 0;
  for (const auto& row : table.rows) {
    const auto ex = norm_growth_expansion(pair, mu, row.delta);
    if (row.delta == mu) {
      if (!ex.balances) {
        v.pass = false;
        v.detail = "expansion fails to balance at delta = " + weight_str(row.delta);
        return v;
      }
      continue;
    }
    ++above;
    if (!row.norm_growth_ok || !ex.balances || ex.square < 0 || ex.cross < 0 ||
        ex.total <= ex.base) {
      v.pass = false;
      v.detail = "delta = " + weight_str(row.delta) + " has norm " + rat_str(ex.total) +
                 " against " + rat_str(ex.base) + " at mu";
      return v;
    }
  }
  v.detail = int_str(above) + " rows strictly above the minimum norm " +
             rat_str(vogan_norm_sq(pair, mu));
  return v;
}

// dominant integral weights of k with fundamental coefficients summing <= cap
std::vector<Weight> dominant_sweep(const RootSystem& k, int cap) {
  RatMat at(k.rank, RatVec(k.rank));
  for (std::size_t i = 0; i < k.rank; ++i)
    for (std::size_t j = 0; j < k.rank; ++j) at[i][j] = Rat(k.cartan[j][i]);
  std::vector<Weight> fw;
  for (std::size_t m = 0; m < k.rank; ++m) {
    RatVec e(k.rank, Rat(0));
    e[m] = 1;
    fw.push_back(*rat_solve(at, e));
  }
  std::vector<Weight> out;
  std::vector<int> c(k.rank, 0);
  while (true) {
    int total = 0;
    for (int x : c) total += x;
    if (total <= cap) {
      Weight lam(k.rank, Rat(0));
      for (std::size_t m = 0; m < k.rank; ++m)
        lam = weight_add(lam, weight_scale(Rat(c[m]), fw[m]));
      out.push_back(lam);
    }
    std::size_t pos = 0;
    while (pos < c.size() && c[pos] == cap) c[pos++] = 0;
    if (pos == c.size()) break;
    ++c[pos];
  }
  return out;
}

}  // namespace

std::string render_describe_text(const PairDoc& doc) {
  const ReductivePair& p = doc.pair;
  std::string s = pair_header(doc);
  if (!doc.description.empty()) s += "description: " + doc.description + "\n";
  s += "g: " + doc.g_label + ", rank " + std::to_string(p.g.rank) + ", " +
       std::to_string(p.g.positive_roots.size()) + " positive roots\n";
  s += "dim t: " + std::to_string(p.t_dim) + "\n";
  s += "restriction h* -> t*:\n" + matrix_block(p.restriction);
  s += "induced form on t*:\n" + matrix_block(p.t_form);
  s += "k simple roots: " +
       (p.k_simple.empty() ? std::string("none (abelian k)") : weights_line(p.k_simple)) + "\n";
  s += "k positive roots: " + weights_line(p.k_positive) + "\n";
  s += "rho: " + weight_str(p.rho_k) + "\n";
  s += "|W_k|: " + std::to_string(k_weyl_group(p).size()) + "\n";
  s += "ch_t(g): " + mset_str(p.chi_t_g) + "\n";
  s += "ch_t(k): " + mset_str(p.chi_t_k) + "\n";
  s += "ch_t(k-perp): " + mset_str(p.chi_t_perp) + "\n";
  return s;
}

std::string render_describe_json(const PairDoc& doc) {
  json j;
  j["schema"] = "fseries-report/1";
  j["command"] = "describe";
  j["pair"] = pair_j(doc);
  return j.dump(2) + "\n";
}

std::string render_parabolic_text(const PairDoc& doc, const Weight& mu,
                                  const std::vector<std::size_t>& tiebreak,
                                  const CompatibleParabolic& parab) {
  std::string s = pair_header(doc);
  s += "mu: " + weight_str(mu) + "\n";
  s += "tiebreak: " + tiebreak_str(tiebreak) + "\n";
  std::string rows;
  for (std::size_t i = 0; i < parab.lex.rows.size(); ++i) {
    if (i) rows += "; ";
    rows += weight_str(parab.lex.rows[i]);
  }
  s += "lex rows: " + rows + "\n";
  s += "n: " + mset_str(parab.n_weights) + "\n";
  s += "m: " + mset_str(parab.m_weights) + "\n";
  s += "n cap k: " + mset_str(parab.n_cap_k) + "\n";
  s += "n cap k-perp: " + mset_str(parab.n_cap_perp) + "\n";
  s += "s: " + int_str(parab.s) + "\n";
  s += "rho_n: " + weight_str(parab.rho_n) + "\n";
  s += "rho_n_perp: " + weight_str(parab.rho_n_perp) + "\n";
  s += "levi positive roots (h*): " + weights_line(parab.levi_positive) + "\n";
  s += "levi simple roots (h*): " + weights_line(levi_simple_roots(parab)) + "\n";
  s += "contained in the mu+2rho parabolic: " +
       std::string(check_containment(doc.pair, parab, mu) ? "yes" : "no") + "\n";
  return s;
}

std::string render_parabolic_json(const PairDoc& doc, const Weight& mu,
                                  const std::vector<std::size_t>& tiebreak,
                                  const CompatibleParabolic& parab) {
  json j;
  j["schema"] = "fseries-report/1";
  j["command"] = "parabolic";
  j["pair"] = pair_j(doc);
  json run;
  run["mu"] = weight_j(mu);
  json tb = json::array();
  for (const auto& t : tiebreak) tb.push_back(t);
  run["tiebreak"] = tb;
  j["run"] = run;
  j["parabolic"] = parab_j(parab, tiebreak);
  j["contained"] = check_containment(doc.pair, parab, mu);
  return j.dump(2) + "\n";
}

std::vector<Verdict> table_verdicts(const ReductivePair& pair,
                                      const CompatibleParabolic& parab, const EModule& e,
                                      const KTypeTable& table, const Weight& mu) {
  return {check_top_degree(pair, parab, e, mu), check_min_type(pair, parab, e, mu),
          check_norm_growth(pair, table, mu)};
}

bool all_pass(const std::vector<Verdict>& v) {
  for (const auto& x : v)
    if (!x.pass) return false;
  return true;
}

std::string render_table_text(const PairDoc& doc, const RunSettings& run,
                              const CompatibleParabolic& parab, const EModule& e,
                              const KTypeTable& table, const std::vector<Verdict>& verdicts) {
  std::string s = run_header(doc, run, e);
  s += "omega: " + weight_str(e.omega) + "\n";
  s += "dim E: " + int_str(e.dim_e) + "\n";
  s += "s: " + int_str(parab.s) + "\n";
  s += "n cap k: " + mset_str(parab.n_cap_k) + "\n";
  s += "n cap k-perp: " + mset_str(parab.n_cap_perp) + "\n";
  s += "rho_n_perp: " + weight_str(parab.rho_n_perp) + "\n";
  for (const auto& w : table.warnings) s += "warning: " + w + "\n";
  s += "\n";
  if (table.rows.empty())
    s += "no rows\n";
  else
    s += table_grid(table, run.mu);
  s += "\n";
  for (const auto& v : verdicts) s += "verdict " + verdict_line(v) + "\n";
  s += "overall: " + std::string(all_pass(verdicts) ? "PASS" : "FAIL") + "\n";
  return s;
}

std::string render_table_json(const PairDoc& doc, const RunSettings& run,
                              const CompatibleParabolic& parab, const EModule& e,
                              const KTypeTable& table, const std::vector<Verdict>& verdicts) {
  json j;
  j["schema"] = "fseries-report/1";
  j["command"] = "table";
  j["pair"] = pair_j(doc);
  j["run"] = run_j(run);
  j["parabolic"] = parab_j(parab, run.tiebreak);
  j["module"] = module_j(e, !run.kappa.has_value());
  json rows = json::array();
  for (const auto& r : table.rows) {
    json row;
    row["delta"] = weight_j(r.delta);
    row["chi"] = int_j(r.chi);
    row["bound_top"] = int_j(r.bound_top);
    row["norm"] = rat_j(r.vogan_norm);
    row["growth_ok"] = r.norm_growth_ok;
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["warnings"] = table.warnings;
  j["verdicts"] = verdicts_j(verdicts);
  j["overall"] = all_pass(verdicts);
  return j.dump(2) + "\n";
}

VerifyOutcome run_verify(const PairDoc& doc, const RunSettings& run) {
  const ReductivePair& pair = doc.pair;
  VerifyOutcome out;
  auto add = [&](const char* name, bool pass, std::string detail) {
    out.checks.push_back({name, pass, std::move(detail)});
  };

  const auto lex = lex_functional(pair, run.mu, run.tiebreak);
  const auto parab = build_parabolic(pair, lex);
  const Weight kap = run.kappa ? *run.kappa : auto_kappa(pair, parab, run.mu);
  const EModule e = validate_E(pair, parab, run.mu, kap);
  const KTypeTable table = enumerate_ktypes(pair, parab, e, run.mu, run.cutoff);
  out.warnings = table.warnings;

  {
    bool pass = true;
    std::string detail =
        "restriction covers ch_t(g); ch_t(k-perp) stable under negation and k-reflections";
    WeightMultiset rebuilt;
    for (const auto& a : pair.g.positive_roots) {
      const Weight r = pair.restrict_h(a);
      rebuilt[r] += 1;
      rebuilt[weight_scale(-1, r)] += 1;
    }
    rebuilt[Weight(pair.t_dim, Rat(0))] += Int(pair.g.rank);
    if (rebuilt != pair.chi_t_g) {
      pass = false;
      detail = "restricted g-roots do not reproduce ch_t(g)";
    }
    if (pass && multiset_negate(pair.chi_t_perp) != pair.chi_t_perp) {
      pass = false;
      detail = "ch_t(k-perp) is not stable under negation";
    }
    for (std::size_t i = 0; pass && i < pair.k_simple.size(); ++i) {
      WeightMultiset image;
      for (const auto& [w, m] : pair.chi_t_perp) image[pair.k_reflect(i, w)] += m;
      if (image != pair.chi_t_perp) {
        pass = false;
        detail = "ch_t(k-perp) moves under the reflection in " + weight_str(pair.k_simple[i]);
      }
    }
    add("pair-invariants", pass, detail);
  }

  {
    bool pass = true;
    std::string detail = "conservation and positive-k-root compatibility hold; s = " +
                         int_str(parab.s);
    const WeightMultiset whole = multiset_union(
        parab.m_weights, multiset_union(parab.n_weights, multiset_negate(parab.n_weights)));
    if (whole != pair.chi_t_g) {
      pass = false;
      detail = "m + n + (-n) does not reproduce ch_t(g)";
    }
    WeightMultiset posk;
    for (const auto& b : pair.k_positive) posk[b] += 1;
    if (pass && parab.n_cap_k != posk) {
      pass = false;
      detail = "n cap k differs from the positive k-roots";
    }
    for (const auto& [w, m] : parab.m_weights)
      if (pass && !weight_is_zero(w)) {
        pass = false;
        detail = "m contains the nonzero weight " + weight_str(w);
      }
    if (pass && !check_containment(pair, parab, run.mu)) {
      pass = false;
      detail = "an n-weight pairs negatively with mu+2rho";
    }
    add("parabolic-split", pass, detail);
  }

  {
    const Weight expected = weight_sub(run.mu, weight_scale(2, parab.rho_n_perp));
    const EModule again = validate_E(pair, parab, run.mu, e.kappa);
    const bool pass =
        (e.omega == expected) && (again.omega == e.omega) && (again.dim_e == e.dim_e);
    add("inducing-module", pass,
        "omega = " + weight_str(e.omega) + ", dim E = " + int_str(e.dim_e));
  }

  const Verdict top = check_top_degree(pair, parab, e, run.mu);
  out.checks.push_back(top);
  out.checks.push_back(check_min_type(pair, parab, e, run.mu));
  out.checks.push_back(check_norm_growth(pair, table, run.mu));

  {
    if (!pair.k_abstract) {
      add("kostant-character-oracle", true, "abelian k: both sides reduce to e^delta");
      add("freudenthal-weyl-dim", true, "abelian k: all modules are one-dimensional");
    } else if (pair.k_abstract->rank > 2) {
      const std::string why = "skipped: k rank " + std::to_string(pair.k_abstract->rank) +
                              " above the rank-2 oracle guard";
      add("kostant-character-oracle", true, why);
      add("freudenthal-weyl-dim", true, why);
    } else {
      const RootSystem& k = *pair.k_abstract;
      const auto sweep = dominant_sweep(k, 4);
      bool oracle = true, dims = true;
      std::string oracle_detail = "identity holds at " + std::to_string(sweep.size()) +
                                  " dominant weights";
      std::string dim_detail = "dimension sums agree at " + std::to_string(sweep.size()) +
                               " dominant weights";
      for (const auto& lam : sweep) {
        if (oracle && !character_identity_check(k, lam)) {
          oracle = false;
          oracle_detail = "identity fails at weight " + weight_str(lam);
        }
        Int total = 0;
        for (const auto& [w, m] : freudenthal_character(k, lam)) total += m;
        if (dims && total != weyl_dim(k, lam)) {
          dims = false;
          dim_detail = "dimension mismatch at weight " + weight_str(lam);
        }
      }
      add("kostant-character-oracle", oracle, oracle_detail);
      add("freudenthal-weyl-dim", dims, dim_detail);
    }
  }

  {
    int max_len = 0;
    for (const auto& w : k_weyl_group(pair)) max_len = std::max(max_len, w.length());
    bool pass = true;
    std::string detail =
        "|chi| within the degree-sum bound on " + std::to_string(table.rows.size()) + " rows";
    for (const auto& row : table.rows) {
      Int sum = 0;
      for (int i = 0; i <= max_len; ++i)
        sum += occurrence_bound(pair, parab, e, row.delta, i);
      if (abs(row.chi) > sum) {
        pass = false;
        detail = "delta = " + weight_str(row.delta) + " has |chi| = " + int_str(abs(row.chi)) +
                 " above the bound " + int_str(sum);
        break;
      }
    }
    add("euler-bound-dominance", pass, detail);
  }

  {
    auto render_once = [&] {
      const auto lex2 = lex_functional(pair, run.mu, run.tiebreak);
      const auto parab2 = build_parabolic(pair, lex2);
      const Weight kap2 = run.kappa ? *run.kappa : auto_kappa(pair, parab2, run.mu);
      const EModule e2 = validate_E(pair, parab2, run.mu, kap2);
      const KTypeTable t2 = enumerate_ktypes(pair, parab2, e2, run.mu, run.cutoff);
      return render_table_text(doc, run, parab2, e2, t2,
                               table_verdicts(pair, parab2, e2, t2, run.mu));
    };
    const bool pass = render_once() == render_once();
    add("determinism", pass,
        pass ? "two pipeline runs render byte-identical tables" : "renders differ between runs");
  }

  out.overall = all_pass(out.checks);
  return out;
}

std::string render_verify_text(const PairDoc& doc, const RunSettings& run, const EModule& e,
                               const VerifyOutcome& outcome) {
  std::string s = run_header(doc, run, e);
  for (const auto& w : outcome.warnings) s += "warning: " + w + "\n";
  s += "\n";
  for (const auto& c : outcome.checks) s += verdict_line(c) + "\n";
  s += "overall: " + std::string(outcome.overall ? "PASS" : "FAIL") + "\n";
  return s;
}

std::string render_verify_json(const PairDoc& doc, const RunSettings& run, const EModule& e,
                               const VerifyOutcome& outcome) {
  json j;
  j["schema"] = "fseries-report/1";
  j["command"] = "verify";
  j["pair"] = pair_j(doc);
  j["run"] = run_j(run);
  j["module"] = module_j(e, !run.kappa.has_value());
  j["checks"] = verdicts_j(outcome.checks);
  j["warnings"] = outcome.warnings;
  j["overall"] = outcome.overall;
  return j.dump(2) + "\n";
}

}  // namespace fseries
