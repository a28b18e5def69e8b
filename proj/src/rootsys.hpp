// Root systems from Cartan matrices, Weyl groups, Weyl dimension formula and
// Freudenthal weight multiplicities. Weights are coordinate vectors in the
// simple-root basis of the ambient dual space; all arithmetic is exact.
#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ratlin.hpp"

namespace fseries {

using Weight = RatVec;  // coordinates in a fixed basis (simple roots for g, k)

// map ordered by exact lexicographic coordinate compare
using WeightMultiset = std::map<Weight, Int>;

WeightMultiset multiset_union(const WeightMultiset& a, const WeightMultiset& b);
// pointwise difference; engine_error kind NonContainment when any entry would
// go negative (offender reported in the message)
WeightMultiset multiset_difference(const WeightMultiset& a, const WeightMultiset& b);
Weight multiset_half_sum(const WeightMultiset& f, std::size_t dim);
Int multiset_total(const WeightMultiset& f);
WeightMultiset multiset_negate(const WeightMultiset& f);

Weight weight_add(const Weight& a, const Weight& b);
Weight weight_sub(const Weight& a, const Weight& b);
Weight weight_scale(const Rat& c, const Weight& a);
bool weight_is_zero(const Weight& a);
std::string weight_str(const Weight& a);

struct WeylElement {
  std::vector<int> word;  // reduced word in simple reflections (0-based)
  RatMat matrix;          // action on root coordinates, columns = images
  int length() const { return static_cast<int>(word.size()); }
};

struct RootSystem {
  std::size_t rank = 0;
  std::vector<std::vector<Int>> cartan;  // a[i][j] = 2(ai,aj)/(aj,aj)
  RatVec half_norms;                     // d[i] = (ai,ai)/2, max 1 per component
  RatMat form;                           // gram matrix, form[i][j] = (ai,aj)
  std::vector<Weight> simple_roots;      // e_i in root coordinates
  std::vector<Weight> positive_roots;    // increasing height, ties by earliest simple
  std::vector<std::vector<int>> components;  // simple indices per simple ideal

  Rat pairing(const Weight& v, const Weight& w) const;  // (v,w) under form
  Rat norm_sq(const Weight& v) const;
  // 2(v,ai)/(ai,ai), the coroot pairing against simple root i
  Rat coroot_pairing(const Weight& v, std::size_t i) const;
  Weight reflect(std::size_t i, const Weight& v) const;  // simple reflection
  Weight rho() const;                                    // half-sum of positives
  // nonnegative (and for integral: integer) coroot pairings against all simples
  bool is_dominant(const Weight& v, std::size_t* bad = nullptr) const;
  bool is_integral(const Weight& v, std::size_t* bad = nullptr) const;
  // v mapped into the dominant chamber by simple reflections
  Weight dominant_representative(const Weight& v) const;
};

// Validates shape, integrality, diagonal, sign pattern, symmetrizability and
// positive definiteness (error names the first failing principal minor), then
// closes the positive roots under reflection.
RootSystem build_root_system(const std::vector<std::vector<Int>>& cartan);

// Type strings: A1, B3, G2, ... and products joined by 'x' (A1xA1, A2xG2).
// Rank 0 ("0" or empty product) is rejected.
RootSystem root_system_of_type(const std::string& type);
std::vector<std::vector<Int>> cartan_of_type(const std::string& type);

inline constexpr std::size_t kWeylCapDefault = 100000;

// Full enumeration by breadth-first closure over the simple reflections;
// grouped by length (BFS depth), identity first. engine_error kind
// WeylCapExceeded reports the cap when the group is larger.
std::vector<WeylElement> weyl_group(const RootSystem& rs,
                                    std::size_t cap = kWeylCapDefault);

// dim V(lambda) via the Weyl dimension formula. Rejects non-dominant or
// non-integral lambda naming the violating coroot pairing.
Int weyl_dim(const RootSystem& rs, const Weight& lambda);

// Weight multiplicities of V(lambda) at dominant weights only.
WeightMultiset freudenthal_dominant(const RootSystem& rs, const Weight& lambda);
// Full character: every weight of V(lambda) with its multiplicity.
WeightMultiset freudenthal_character(const RootSystem& rs, const Weight& lambda);
Int freudenthal_multiplicity(const RootSystem& rs, const Weight& lambda,
                             const Weight& weight);

}  // namespace fseries
