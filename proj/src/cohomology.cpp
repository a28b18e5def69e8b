#include "cohomology.hpp"

namespace fseries {

KostantSupport kostant_support(const ReductivePair& pair, const Weight& delta) {
  std::size_t bad = 0;
  if (!pair.k_integral(delta, &bad))
    throw engine_error("NotIntegral", "delta pairs with simple k-root " + std::to_string(bad) +
                                          " as " + rat_str(pair.k_coroot_pairing(delta, bad)) +
                                          ", not an integer");
  if (!pair.k_dominant(delta, &bad))
    throw engine_error("NotDominant", "delta pairs with simple k-root " + std::to_string(bad) +
                                          " as " + rat_str(pair.k_coroot_pairing(delta, bad)) +
                                          ", negative");
  KostantSupport sup;
  const Weight shifted = weight_add(delta, pair.rho_k);
  for (const auto& w : k_weyl_group(pair)) {
    const Weight img = weight_sub(rat_apply(w.matrix, shifted), pair.rho_k);
    sup.by_degree[w.length()][img] += 1;
  }
  return sup;
}

bool character_identity_check(const RootSystem& k, const Weight& delta) {
  if (k.rank > 2)
    throw engine_error("RankGuard", "character identity oracle is limited to rank <= 2, got " +
                                        std::to_string(k.rank));
  // left side: alternating orbit of delta+rho, shifted back by rho
  const Weight rho = k.rho();
  const Weight shifted = weight_add(delta, rho);
  std::map<Weight, Int> lhs;
  for (const auto& w : weyl_group(k)) {
    const Weight img = weight_sub(rat_apply(w.matrix, shifted), rho);
    lhs[img] += (w.length() % 2 == 0) ? 1 : -1;
  }
  // right side: full character times prod (1 - e^{-a})
  std::map<Weight, Int> rhs;
  for (const auto& [w, m] : freudenthal_character(k, delta)) rhs[w] = m;
  for (const auto& a : k.positive_roots) {
    std::map<Weight, Int> next;
    for (const auto& [w, c] : rhs) {
      next[w] += c;
      next[weight_sub(w, a)] -= c;
    }
    rhs = std::move(next);
  }
  auto strip = [](std::map<Weight, Int>& p) {
    for (auto it = p.begin(); it != p.end();)
      it = (it->second == 0) ? p.erase(it) : std::next(it);
  };
  strip(lhs);
  strip(rhs);
  return lhs == rhs;
}

}  // namespace fseries
