#include "pairspec.hpp"

#include <algorithm>

namespace fseries {

Rat ReductivePair::t_pairing(const Weight& v, const Weight& w) const {
  return rat_dot(v, t_form, w);
}

Rat ReductivePair::t_norm(const Weight& v) const { return t_pairing(v, v); }

Weight ReductivePair::restrict_h(const Weight& w) const { return rat_apply(restriction, w); }

Weight ReductivePair::lift_t(const Weight& v) const { return rat_apply(lift, v); }

Rat ReductivePair::k_coroot_pairing(const Weight& v, std::size_t i) const {
  const Weight& b = k_simple[i];
  return 2 * t_pairing(v, b) / t_pairing(b, b);
}

bool ReductivePair::k_dominant(const Weight& v, std::size_t* bad) const {
  for (std::size_t i = 0; i < k_simple.size(); ++i)
    if (k_coroot_pairing(v, i) < 0) {
      if (bad) *bad = i;
      return false;
    }
  return true;
}

bool ReductivePair::k_integral(const Weight& v, std::size_t* bad) const {
  for (std::size_t i = 0; i < k_simple.size(); ++i)
    if (denominator(k_coroot_pairing(v, i)) != 1) {
      if (bad) *bad = i;
      return false;
    }
  return true;
}

Weight ReductivePair::k_reflect(std::size_t i, const Weight& v) const {
  const Weight& b = k_simple[i];
  return weight_sub(v, weight_scale(k_coroot_pairing(v, i), b));
}

ReductivePair build_pair(const RootSystem& g, const RatMat& embed,
                         const std::vector<Weight>& k_simple) {
  ReductivePair pair;
  pair.g = g;
  pair.embed = embed;
  const std::size_t n = g.rank;
  if (embed.size() != n)
    throw engine_error("ConfigError", "embedding matrix must have one row per simple root of g");
  const std::size_t r = embed.empty() ? 0 : embed[0].size();
  if (r == 0 || r > n)
    throw engine_error("ConfigError", "embedding must have between 1 and rank(g) columns");
  for (const auto& row : embed)
    if (row.size() != r) throw engine_error("ConfigError", "ragged embedding matrix");
  pair.t_dim = r;

  // G = E^T B E is the gram matrix of the chosen t-basis; the induced form on
  // t* is its inverse
  const RatMat et = rat_transpose(embed);
  const RatMat etb = rat_mul(et, g.form);
  const RatMat gram = rat_mul(etb, embed);
  int bad_minor = 0;
  if (!is_positive_definite(gram, &bad_minor))
    throw engine_error("DegenerateForm",
                       "induced form on t is not positive definite (leading principal minor " +
                           std::to_string(bad_minor) + "); is the embedding full rank?");
  pair.restriction = etb;
  pair.t_form = *rat_inverse(gram);
  pair.lift = rat_mul(embed, pair.t_form);

  // restricted g-roots; zero restrictions pile onto the 0 weight
  pair.chi_t_g[Weight(r, Rat(0))] = Int(n);
  std::vector<RatVec> lattice_gens;
  for (const auto& a : g.positive_roots) {
    const Weight ra = pair.restrict_h(a);
    Weight na(r);
    for (std::size_t i = 0; i < r; ++i) na[i] = -ra[i];
    pair.chi_t_g[ra] += 1;
    pair.chi_t_g[na] += 1;
    lattice_gens.push_back(ra);
  }

  for (std::size_t i = 0; i < k_simple.size(); ++i) {
    if (k_simple[i].size() != r)
      throw engine_error("ConfigError", "k-root " + std::to_string(i) + " has wrong dimension");
    if (weight_is_zero(k_simple[i]))
      throw engine_error("ConfigError", "k-root " + std::to_string(i) + " is zero");
    if (!in_lattice(lattice_gens, k_simple[i]))
      throw engine_error("LatticeMismatch",
                         "k-root " + std::to_string(i) + " = " + weight_str(k_simple[i]) +
                             " is not in the lattice of restricted g-roots");
  }
  pair.k_simple = k_simple;

  if (!k_simple.empty()) {
    const std::size_t m = k_simple.size();
    std::vector<std::vector<Int>> kc(m, std::vector<Int>(m));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const Rat a = 2 * pair.t_pairing(k_simple[i], k_simple[j]) /
                      pair.t_pairing(k_simple[j], k_simple[j]);
        if (denominator(a) != 1)
          throw engine_error("CartanMismatch", "k-root pairing (" + std::to_string(i) + "," +
                                                   std::to_string(j) + ") is " + rat_str(a) +
                                                   ", not an integer");
        kc[i][j] = numerator(a);
      }
    try {
      pair.k_abstract = build_root_system(kc);
    } catch (const engine_error& e) {
      throw engine_error("CartanMismatch",
                         std::string("k-roots do not form a finite root system: ") + e.what());
    }
    for (const auto& abs_root : pair.k_abstract->positive_roots) {
      Weight b(r, Rat(0));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t c = 0; c < r; ++c) b[c] += abs_root[i] * k_simple[i][c];
      pair.k_positive.push_back(b);
    }
  }

  pair.chi_t_k[Weight(r, Rat(0))] = Int(r);
  for (const auto& b : pair.k_positive) {
    Weight nb(r);
    for (std::size_t i = 0; i < r; ++i) nb[i] = -b[i];
    pair.chi_t_k[b] += 1;
    pair.chi_t_k[nb] += 1;
  }

  pair.chi_t_perp = multiset_difference(pair.chi_t_g, pair.chi_t_k);
  if (pair.chi_t_perp != multiset_negate(pair.chi_t_perp))
    throw engine_error("PerpNotSelfDual", "ch_t(k^perp) is not stable under negation");

  pair.rho_k = multiset_half_sum([&] {
    WeightMultiset pos;
    for (const auto& b : pair.k_positive) pos[b] += 1;
    return pos;
  }(), r);
  return pair;
}

Weight restrict_weight(const ReductivePair& pair, const Weight& w) {
  return pair.restrict_h(w);
}

Rat t_norm_sq(const ReductivePair& pair, const Weight& w) { return pair.t_norm(w); }

std::vector<WeylElement> k_weyl_group(const ReductivePair& pair, std::size_t cap) {
  const std::size_t r = pair.t_dim;
  std::vector<RatMat> gens;
  for (const auto& b : pair.k_simple) {
    // s_b = id - 2 b (Tb)^T / (b,b) acting on t* column vectors
    const Rat b2 = pair.t_pairing(b, b);
    RatMat s = rat_identity(r);
    const Weight tb = rat_apply(pair.t_form, b);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) s[i][j] -= 2 * b[i] * tb[j] / b2;
    gens.push_back(std::move(s));
  }
  auto flat = [r](const RatMat& m) {
    RatVec f;
    f.reserve(r * r);
    for (const auto& row : m) f.insert(f.end(), row.begin(), row.end());
    return f;
  };
  std::vector<WeylElement> out;
  std::map<RatVec, std::size_t> seen;
  out.push_back(WeylElement{{}, rat_identity(r)});
  seen.emplace(flat(out[0].matrix), 0);
  for (std::size_t head = 0; head < out.size(); ++head) {
    const WeylElement cur = out[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      WeylElement next;
      next.matrix = rat_mul(cur.matrix, gens[i]);
      const RatVec key = flat(next.matrix);
      if (seen.count(key)) continue;
      next.word = cur.word;
      next.word.push_back(static_cast<int>(i));
      if (out.size() >= cap)
        throw engine_error("WeylCapExceeded",
                           "k Weyl group enumeration exceeded the cap of " + std::to_string(cap) +
                               " elements");
      seen.emplace(key, out.size());
      out.push_back(std::move(next));
    }
  }
  return out;
}

}  // namespace fseries
