#include "multengine.hpp"

#include <algorithm>

namespace fseries {

namespace {

void require_k_dominant_integral(const ReductivePair& pair, const Weight& v,
                                 const std::string& name) {
  std::size_t bad = 0;
  if (!pair.k_integral(v, &bad))
    throw engine_error("NotIntegral", name + " pairs with simple k-root " + std::to_string(bad) +
                                          " as " + rat_str(pair.k_coroot_pairing(v, bad)) +
                                          ", not an integer");
  if (!pair.k_dominant(v, &bad))
    throw engine_error("NotDominant", name + " pairs with simple k-root " + std::to_string(bad) +
                                          " as " + rat_str(pair.k_coroot_pairing(v, bad)) +
                                          ", negative");
}

Int multichoose(const Int& slots, const Int& picks) {
  // C(picks + slots - 1, slots - 1)
  Int num = 1, den = 1;
  for (Int i = 1; i < slots; ++i) {
    num *= picks + i;
    den *= i;
  }
  return num / den;
}

// A t*-vector phi with <phi, beta> >= 1 for every generator beta: stack the
// lex rows with weights D*M^level so the first lex-positive pairing dominates
// everything below it.
Weight termination_functional(const ReductivePair& pair, const CompatibleParabolic& parab) {
  const auto& rows = parab.lex.rows;
  Int d_lcm = 1;
  Int max_abs = 0;
  for (const auto& [beta, mult] : parab.n_cap_perp)
    for (const auto& row : rows) d_lcm = lcm(d_lcm, denominator(pair.t_pairing(row, beta)));
  for (const auto& [beta, mult] : parab.n_cap_perp)
    for (const auto& row : rows) {
      const Int v = abs(numerator(Rat(pair.t_pairing(row, beta) * d_lcm)));
      max_abs = std::max(max_abs, v);
    }
  const Int m_base = max_abs + 1;
  Weight phi(pair.t_dim, Rat(0));
  Int scale = 1;
  for (std::size_t i = rows.size(); i-- > 0;) {
    phi = weight_add(phi, weight_scale(Rat(d_lcm * scale), rows[i]));
    scale *= m_base;
  }
  return phi;
}

Weight shifted_target(const ReductivePair& pair, const CompatibleParabolic& parab,
                      const EModule& e, const RatMat& w_matrix, const Weight& delta) {
  const Weight img = rat_apply(w_matrix, weight_add(delta, pair.rho_k));
  Weight xi = weight_sub(img, pair.rho_k);
  xi = weight_sub(xi, e.omega);
  return weight_sub(xi, weight_scale(2, parab.rho_n_perp));
}

bool find_partition(const ReductivePair& pair, const std::vector<Weight>& gens,
                    const Weight& phi, std::size_t idx, const Weight& remaining,
                    WeightMultiset& out) {
  if (idx == gens.size()) return weight_is_zero(remaining);
  const Weight& beta = gens[idx];
  const Rat phi_beta = pair.t_pairing(phi, beta);
  Weight rest = remaining;
  for (Int c = 0;; ++c) {
    if (pair.t_pairing(phi, rest) < 0) return false;
    if (find_partition(pair, gens, phi, idx + 1, rest, out)) {
      if (c > 0) out[beta] = c;
      return true;
    }
    rest = weight_sub(rest, beta);
    (void)phi_beta;
  }
}

}  // namespace

EModule validate_E(const ReductivePair& pair, const CompatibleParabolic& parab,
                   const Weight& mu, const Weight& kappa) {
  require_k_dominant_integral(pair, mu, "mu");
  if (kappa.size() != pair.g.rank)
    throw engine_error("ConfigError", "kappa has dimension " + std::to_string(kappa.size()) +
                                          ", expected rank(g) = " + std::to_string(pair.g.rank));
  EModule e;
  e.kappa = kappa;
  e.omega = pair.restrict_h(kappa);
  const Weight expected = weight_sub(mu, weight_scale(2, parab.rho_n_perp));
  if (e.omega != expected)
    throw engine_error("OmegaMismatch", "kappa restricts to " + weight_str(e.omega) +
                                            " but the inducing module must carry " +
                                            weight_str(expected));

  const std::vector<Weight> simples = levi_simple_roots(parab);
  for (const auto& a : simples) {
    const Rat p = 2 * pair.g.pairing(kappa, a) / pair.g.norm_sq(a);
    if (denominator(p) != 1 || p < 0)
      throw engine_error("NotDominantOnLevi", "kappa pairs with Levi simple root " +
                                                  weight_str(a) + " as " + rat_str(p) +
                                                  ", not a nonnegative integer");
  }
  Weight rho_m(pair.g.rank, Rat(0));
  for (const auto& a : parab.levi_positive) rho_m = weight_add(rho_m, a);
  rho_m = weight_scale(Rat(1, 2), rho_m);
  Rat dim = 1;
  for (const auto& a : parab.levi_positive)
    dim *= pair.g.pairing(weight_add(kappa, rho_m), a) / pair.g.pairing(rho_m, a);
  if (denominator(dim) != 1 || dim <= 0)
    throw engine_error("Internal", "Levi dimension came out as " + rat_str(dim));
  e.dim_e = numerator(dim);
  return e;
}

Weight auto_kappa(const ReductivePair& pair, const CompatibleParabolic& parab,
                  const Weight& mu) {
  require_k_dominant_integral(pair, mu, "mu");
  return pair.lift_t(weight_sub(mu, weight_scale(2, parab.rho_n_perp)));
}

Int sym_mult(const CompatibleParabolic& parab, const Weight& xi, const Int& m) {
  if (m < 0) return 0;
  const std::size_t deg = m.convert_to<std::size_t>();
  const std::size_t r = xi.size();
  std::vector<std::map<Weight, Int>> dp(deg + 1);
  dp[0][Weight(r, Rat(0))] = 1;
  for (const auto& [beta, mult] : parab.n_cap_perp) {
    std::vector<std::map<Weight, Int>> next(deg + 1);
    for (std::size_t d = 0; d <= deg; ++d)
      for (const auto& [w, cnt] : dp[d]) {
        Weight acc = w;
        for (std::size_t c = 0; d + c <= deg; ++c) {
          next[d + c][acc] += cnt * multichoose(mult, Int(c));
          acc = weight_add(acc, beta);
        }
      }
    dp = std::move(next);
  }
  const auto it = dp[deg].find(xi);
  return it == dp[deg].end() ? Int(0) : it->second;
}

Int sym_mult_total(const ReductivePair& pair, const CompatibleParabolic& parab,
                   const Weight& xi) {
  if (parab.n_cap_perp.empty()) return weight_is_zero(xi) ? 1 : 0;
  const Weight phi = termination_functional(pair, parab);
  const Rat budget = pair.t_pairing(phi, xi);
  if (budget < 0) return 0;
  std::map<Weight, Int> dp;
  dp[Weight(xi.size(), Rat(0))] = 1;
  for (const auto& [beta, mult] : parab.n_cap_perp) {
    std::map<Weight, Int> next;
    for (const auto& [w, cnt] : dp) {
      Weight acc = w;
      for (Int c = 0; pair.t_pairing(phi, acc) <= budget; ++c) {
        next[acc] += cnt * multichoose(mult, c);
        acc = weight_add(acc, beta);
      }
    }
    dp = std::move(next);
  }
  const auto it = dp.find(xi);
  return it == dp.end() ? Int(0) : it->second;
}

std::vector<OccurrenceWitness> occurrence_witnesses(const ReductivePair& pair,
                                                    const CompatibleParabolic& parab,
                                                    const EModule& e, const Weight& delta,
                                                    int i) {
  require_k_dominant_integral(pair, delta, "delta");
  std::vector<Weight> gens;
  for (const auto& [beta, mult] : parab.n_cap_perp) gens.push_back(beta);
  const Weight phi = parab.n_cap_perp.empty() ? Weight(pair.t_dim, Rat(0))
                                              : termination_functional(pair, parab);
  std::vector<OccurrenceWitness> out;
  for (const auto& w : k_weyl_group(pair)) {
    if (w.length() != i) continue;
    const Weight xi = shifted_target(pair, parab, e, w.matrix, delta);
    WeightMultiset counts;
    if (find_partition(pair, gens, phi, 0, xi, counts)) out.push_back({w, std::move(counts)});
  }
  return out;
}

Int occurrence_bound(const ReductivePair& pair, const CompatibleParabolic& parab,
                     const EModule& e, const Weight& delta, int i) {
  require_k_dominant_integral(pair, delta, "delta");
  Int total = 0;
  for (const auto& w : k_weyl_group(pair)) {
    if (w.length() != i) continue;
    total += sym_mult_total(pair, parab, shifted_target(pair, parab, e, w.matrix, delta));
  }
  return e.dim_e * total;
}

Int euler_multiplicity(const ReductivePair& pair, const CompatibleParabolic& parab,
                       const EModule& e, const Weight& delta) {
  require_k_dominant_integral(pair, delta, "delta");
  Int chi = 0;
  for (const auto& w : k_weyl_group(pair)) {
    const Int total = sym_mult_total(pair, parab, shifted_target(pair, parab, e, w.matrix, delta));
    chi += (w.length() % 2 == 0) ? total : -total;
  }
  return e.dim_e * chi;
}

bool min_type_degree_check(const ReductivePair& pair, const CompatibleParabolic& parab,
                           const EModule& e, const Weight& mu) {
  int max_len = 0;
  for (const auto& w : k_weyl_group(pair)) max_len = std::max(max_len, w.length());
  for (int i = 1; i <= max_len; ++i)
    if (!occurrence_witnesses(pair, parab, e, mu, i).empty()) return false;
  return true;
}

Rat vogan_norm_sq(const ReductivePair& pair, const Weight& delta) {
  return pair.t_norm(weight_add(delta, weight_scale(2, pair.rho_k)));
}

NormExpansion norm_growth_expansion(const ReductivePair& pair, const Weight& mu,
                                    const Weight& delta) {
  NormExpansion ex;
  const Weight base = weight_add(mu, weight_scale(2, pair.rho_k));
  const Weight x = weight_sub(delta, mu);
  ex.total = vogan_norm_sq(pair, delta);
  ex.base = pair.t_norm(base);
  ex.square = pair.t_norm(x);
  ex.cross = 2 * pair.t_pairing(base, x);
  ex.balances = (ex.total == ex.base + ex.square + ex.cross);
  return ex;
}

KTypeTable enumerate_ktypes(const ReductivePair& pair, const CompatibleParabolic& parab,
                            const EModule& e, const Weight& mu, const Rat& cutoff) {
  require_k_dominant_integral(pair, mu, "mu");
  KTypeTable table;
  const Rat mu_norm = vogan_norm_sq(pair, mu);
  if (cutoff < mu_norm) {
    table.warnings.push_back("norm cutoff " + rat_str(cutoff) +
                             " is below the minimal row norm " + rat_str(mu_norm) +
                             "; no candidate survives");
    return table;
  }

  std::set<Weight> candidates;
  if (parab.n_cap_perp.empty()) {
    candidates.insert(mu);
  } else {
    std::vector<Weight> gens;
    for (const auto& [beta, mult] : parab.n_cap_perp) gens.push_back(beta);
    const Weight phi = termination_functional(pair, parab);
    const Rat phi_norm = pair.t_norm(phi);
    // any admissible displacement x has |x|^2 <= cutoff, so each generator
    // count is at most |phi| |x| / <phi,beta> by Cauchy-Schwarz
    std::vector<Int> box(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Rat pb = pair.t_pairing(phi, gens[i]);
      box[i] = isqrt_floor(rat_floor(phi_norm * cutoff / (pb * pb)));
    }
    std::vector<Int> c(gens.size(), Int(0));
    while (true) {
      Weight x(pair.t_dim, Rat(0));
      for (std::size_t i = 0; i < gens.size(); ++i)
        x = weight_add(x, weight_scale(Rat(c[i]), gens[i]));
      const Weight delta = weight_add(mu, x);
      if (vogan_norm_sq(pair, delta) <= cutoff && pair.k_dominant(delta) &&
          pair.k_integral(delta))
        candidates.insert(delta);
      std::size_t pos = 0;
      while (pos < gens.size() && c[pos] == box[pos]) {
        c[pos] = 0;
        ++pos;
      }
      if (pos == gens.size()) break;
      ++c[pos];
    }
  }

  for (const auto& delta : candidates) {
    KTypeRow row;
    row.delta = delta;
    row.chi = euler_multiplicity(pair, parab, e, delta);
    row.bound_top = occurrence_bound(pair, parab, e, delta, 0);
    row.vogan_norm = vogan_norm_sq(pair, delta);
    row.norm_growth_ok = (delta == mu) || row.vogan_norm > mu_norm;
    table.rows.push_back(std::move(row));
  }
  std::sort(table.rows.begin(), table.rows.end(), [](const KTypeRow& a, const KTypeRow& b) {
    if (a.vogan_norm != b.vogan_norm) return a.vogan_norm < b.vogan_norm;
    return a.delta < b.delta;
  });
  return table;
}

}  // namespace fseries
