// A reductive pair k in g given by t-weight data: an embedding of t into the
// Cartan of g plus the simple k-roots written in t* coordinates. Derives the
// restriction map h* -> t*, the induced form on t*, and the character split
// ch_t(g) = ch_t(k) + ch_t(k^perp).
#pragma once

#include <optional>

#include "rootsys.hpp"

namespace fseries {

struct ReductivePair {
  RootSystem g;
  RatMat embed;        // dim h x dim t, columns form a basis of t
  RatMat restriction;  // dim t x dim h, the map h* -> t*
  RatMat lift;         // dim h x dim t, right inverse: restrict(lift(v)) = v
  RatMat t_form;       // induced gram matrix on t*
  std::size_t t_dim = 0;

  std::vector<Weight> k_simple;          // simple k-roots in t* (empty: torus)
  std::optional<RootSystem> k_abstract;  // coords in the k-simple basis
  std::vector<Weight> k_positive;        // positive k-roots in t*
  WeightMultiset chi_t_g;                // restricted g-roots plus 0 x rank g
  WeightMultiset chi_t_k;                // k-roots plus 0 x dim t
  WeightMultiset chi_t_perp;
  Weight rho_k;  // half-sum of positive k-roots, in t*

  Rat t_pairing(const Weight& v, const Weight& w) const;
  Rat t_norm(const Weight& v) const;
  Weight restrict_h(const Weight& w_in_hstar) const;
  Weight lift_t(const Weight& v_in_tstar) const;

  // 2(v,b_i)/(b_i,b_i) against simple k-root i, under t_form
  Rat k_coroot_pairing(const Weight& v, std::size_t i) const;
  bool k_dominant(const Weight& v, std::size_t* bad = nullptr) const;
  bool k_integral(const Weight& v, std::size_t* bad = nullptr) const;
  Weight k_reflect(std::size_t i, const Weight& v) const;
};

// Validates the embedding and computes every derived field. Errors:
// DegenerateForm (t does not inherit a positive definite form), LatticeMismatch
// (a k-root outside the restricted g-root lattice), CartanMismatch (k-root
// pairings are not a Cartan matrix under the induced form), NonContainment
// (ch_t(k) not contained in ch_t(g)), PerpNotSelfDual (ch_t(k^perp) not stable
// under negation).
ReductivePair build_pair(const RootSystem& g, const RatMat& embed,
                         const std::vector<Weight>& k_simple);

Weight restrict_weight(const ReductivePair& pair, const Weight& w_in_hstar);
Rat t_norm_sq(const ReductivePair& pair, const Weight& w_in_tstar);

// W_k realized on t* by breadth-first closure over the simple k-reflections;
// identity only for a torus.
std::vector<WeylElement> k_weyl_group(const ReductivePair& pair,
                                      std::size_t cap = kWeylCapDefault);

}  // namespace fseries
