// Minimal compatible parabolic subalgebras. Genericity is symbolic: weights
// are ordered by the lexicographic tuple of their pairings against [mu+2rho,
// then a permutation of the t*-basis], which fixes a reproducible minimal
// parabolic inside the one attached to mu+2rho.
#pragma once

#include "pairspec.hpp"

namespace fseries {

struct LexFunctional {
  std::vector<Weight> rows;  // in t*; first row mu+2rho, then basis vectors
};

struct CompatibleParabolic {
  LexFunctional lex;
  WeightMultiset n_weights;   // lex-positive part of ch_t(g)
  WeightMultiset m_weights;   // lex-zero part (t-weight 0 when minimal)
  WeightMultiset n_cap_k;
  WeightMultiset n_cap_perp;
  std::vector<Weight> levi_positive;  // positive g-roots restricting to 0, h* coords
  Weight rho_n;       // t*
  Weight rho_n_perp;  // t*
  Int s;              // dim of n cap k
};

// tiebreak: permutation of 0..dim(t*)-1 selecting the order of the basis rows;
// empty means identity. mu must be k-dominant integral.
LexFunctional lex_functional(const ReductivePair& pair, const Weight& mu,
                             const std::vector<std::size_t>& tiebreak = {});

// pairings of w against each row, in row order
RatVec lex_value(const ReductivePair& pair, const LexFunctional& lex, const Weight& w);
int lex_sign(const ReductivePair& pair, const LexFunctional& lex, const Weight& w);

// Splits ch_t(g) by lex sign. Throws MinimalityFailure if a nonzero weight
// evaluates to the zero tuple (cannot happen when the rows span t*).
CompatibleParabolic build_parabolic(const ReductivePair& pair, const LexFunctional& lex);

// Audit that the parabolic lies inside the one attached to mu+2rho: every
// n-weight pairs >= 0 with mu+2rho.
bool check_containment(const ReductivePair& pair, const CompatibleParabolic& parab,
                       const Weight& mu);

// Simple roots of the Levi subsystem: positive Levi roots that are not sums of
// two positive Levi roots.
std::vector<Weight> levi_simple_roots(const CompatibleParabolic& parab);

}  // namespace fseries
