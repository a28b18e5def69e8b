// The t-support of the nilpotent cohomology of a simple k-module, degree by
// degree, via the rho-shifted dot action of the k Weyl group, plus an
// independent character-level oracle for the underlying identity.
#pragma once

#include <map>

#include "pairspec.hpp"

namespace fseries {

struct KostantSupport {
  std::map<int, WeightMultiset> by_degree;  // degree -> weights, multiplicity 1
};

// delta must be k-dominant integral; weights are w(delta+rho)-rho over W_k
// realized on t*, grouped by length.
KostantSupport kostant_support(const ReductivePair& pair, const Weight& delta);

// Exact sparse-polynomial identity on the group algebra of the weight lattice:
//   sum_w (-1)^{l(w)} e^{w(delta+rho)-rho} = ch V(delta) * prod_{a>0}(1-e^{-a})
// with the character supplied by the Freudenthal recursion. Guarded to rank
// <= 2 (error kind RankGuard); delta must be dominant integral.
bool character_identity_check(const RootSystem& k, const Weight& delta);

}  // namespace fseries
