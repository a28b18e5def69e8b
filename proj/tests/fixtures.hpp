// Pair fixtures used across the test suite, built straight from engine calls.
#pragma once

#include "pairspec.hpp"

namespace fseries::fixtures {

// t = h inside sl(2); k is the Cartan torus, k^perp the two root spaces.
// The root restricts to t*-coordinate 2.
inline ReductivePair cartan_in_a1() {
  return build_pair(build_root_system({{Int(2)}}), {{Rat(1)}}, {});
}

// One-dimensional t; every simple root of sl(3) restricts to 2, so k is a
// principal sl(2).
inline ReductivePair principal_a1_in_a2() {
  return build_pair(root_system_of_type("A2"), {{Rat(2)}, {Rat(2)}}, {{Rat(2)}});
}

// Diagonal sl(2) inside sl(2) x sl(2).
inline ReductivePair diagonal_a1_in_a1xa1() {
  return build_pair(root_system_of_type("A1xA1"), {{Rat(1)}, {Rat(1)}}, {{Rat(2)}});
}

// One-dimensional torus k inside sl(3) with a nontrivial Levi: alpha2
// restricts to zero, alpha1 and the highest root both restrict to 1, giving a
// generator of multiplicity two in k^perp.
inline ReductivePair torus_in_a2() {
  return build_pair(root_system_of_type("A2"), {{Rat(2, 3)}, {Rat(1, 3)}}, {});
}

// Full maximal torus of sl(3) under a skew basis: the three positive roots
// restrict to (2,1), (-1,1), (1,2), so basis-order tiebreaks genuinely matter.
inline ReductivePair skew_torus_in_a2() {
  return build_pair(root_system_of_type("A2"), {{Rat(1), Rat(1)}, {Rat(0), Rat(1)}}, {});
}

// Degenerate pair g = k: k^perp has empty support.
inline ReductivePair self_pair_a1() {
  return build_pair(build_root_system({{Int(2)}}), {{Rat(1)}}, {{Rat(2)}});
}

}  // namespace fseries::fixtures
