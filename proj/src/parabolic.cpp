#include "parabolic.hpp"

#include <algorithm>

namespace fseries {

LexFunctional lex_functional(const ReductivePair& pair, const Weight& mu,
                             const std::vector<std::size_t>& tiebreak) {
  const std::size_t r = pair.t_dim;
  if (mu.size() != r)
    throw engine_error("ConfigError", "mu has dimension " + std::to_string(mu.size()) +
                                          ", expected " + std::to_string(r));
  std::size_t bad = 0;
  if (!pair.k_integral(mu, &bad))
    throw engine_error("NotIntegral", "mu pairs with simple k-root " + std::to_string(bad) +
                                          " as " + rat_str(pair.k_coroot_pairing(mu, bad)) +
                                          ", not an integer");
  if (!pair.k_dominant(mu, &bad))
    throw engine_error("NotDominant", "mu pairs with simple k-root " + std::to_string(bad) +
                                          " as " + rat_str(pair.k_coroot_pairing(mu, bad)) +
                                          ", negative");
  std::vector<std::size_t> order = tiebreak;
  if (order.empty()) {
    order.resize(r);
    for (std::size_t i = 0; i < r; ++i) order[i] = i;
  }
  if (order.size() != r)
    throw engine_error("ConfigError", "tiebreak order must list all " + std::to_string(r) +
                                          " basis indices");
  std::vector<bool> seen(r, false);
  for (std::size_t i : order) {
    if (i >= r || seen[i])
      throw engine_error("ConfigError", "tiebreak order is not a permutation of the basis");
    seen[i] = true;
  }
  LexFunctional lex;
  lex.rows.push_back(weight_add(mu, weight_scale(2, pair.rho_k)));
  for (std::size_t i : order) {
    Weight e(r, Rat(0));
    e[i] = 1;
    lex.rows.push_back(e);
  }
  return lex;
}

RatVec lex_value(const ReductivePair& pair, const LexFunctional& lex, const Weight& w) {
  RatVec v;
  v.reserve(lex.rows.size());
  for (const auto& row : lex.rows) v.push_back(pair.t_pairing(row, w));
  return v;
}

int lex_sign(const ReductivePair& pair, const LexFunctional& lex, const Weight& w) {
  for (const auto& row : lex.rows) {
    const Rat p = pair.t_pairing(row, w);
    if (p > 0) return 1;
    if (p < 0) return -1;
  }
  return 0;
}

CompatibleParabolic build_parabolic(const ReductivePair& pair, const LexFunctional& lex) {
  CompatibleParabolic parab;
  parab.lex = lex;
  const std::size_t r = pair.t_dim;
  for (const auto& [w, m] : pair.chi_t_g) {
    const int sign = lex_sign(pair, lex, w);
    if (sign > 0)
      parab.n_weights[w] = m;
    else if (sign == 0) {
      if (!weight_is_zero(w))
        throw engine_error("MinimalityFailure",
                           "nonzero weight " + weight_str(w) + " has zero lex value");
      parab.m_weights[w] = m;
    }
  }

  // the k part of n: at each weight, the dimensions supplied by k-root spaces
  for (const auto& [w, m] : parab.n_weights) {
    if (weight_is_zero(w)) continue;
    const auto it = pair.chi_t_k.find(w);
    if (it == pair.chi_t_k.end()) continue;
    parab.n_cap_k[w] = std::min(m, it->second);
  }
  parab.n_cap_perp = multiset_difference(parab.n_weights, parab.n_cap_k);

  for (const auto& a : pair.g.positive_roots)
    if (weight_is_zero(pair.restrict_h(a))) parab.levi_positive.push_back(a);

  parab.rho_n = multiset_half_sum(parab.n_weights, r);
  parab.rho_n_perp = multiset_half_sum(parab.n_cap_perp, r);
  parab.s = multiset_total(parab.n_cap_k);
  return parab;
}

bool check_containment(const ReductivePair& pair, const CompatibleParabolic& parab,
                       const Weight& mu) {
  const Weight lam = weight_add(mu, weight_scale(2, pair.rho_k));
  for (const auto& [w, m] : parab.n_weights)
    if (pair.t_pairing(lam, w) < 0) return false;
  return true;
}

std::vector<Weight> levi_simple_roots(const CompatibleParabolic& parab) {
  std::vector<Weight> simple;
  const auto& pos = parab.levi_positive;
  for (const auto& a : pos) {
    bool decomposable = false;
    for (const auto& b : pos) {
      if (b == a) continue;
      const Weight diff = weight_sub(a, b);
      if (std::find(pos.begin(), pos.end(), diff) != pos.end()) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) simple.push_back(a);
  }
  return simple;
}

}  // namespace fseries
