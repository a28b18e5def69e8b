// Euler-characteristic multiplicities of k-types of the induced family
// attached to a minimal parabolic and an inducing module: symmetric-power
// weight counts with an exact termination bound, occurrence witnesses and
// bounds per cohomological degree, and the k-type table with its verdicts.
#pragma once

#include "cohomology.hpp"
#include "parabolic.hpp"

namespace fseries {

struct EModule {
  Weight kappa;  // highest weight on the Levi, h* coordinates
  Weight omega;  // the single t-weight of the module, t* coordinates
  Int dim_e;
};

struct KTypeRow {
  Weight delta;        // t* coordinates
  Int chi;             // Euler characteristic of the occurrence count
  Int bound_top;       // occurrence bound in the top degree (i = 0)
  Rat vogan_norm;      // |delta + 2 rho|^2 under the induced form
  bool norm_growth_ok; // delta == mu, or norm strictly above the mu row
};

struct KTypeTable {
  std::vector<KTypeRow> rows;
  std::vector<std::string> warnings;
};

struct OccurrenceWitness {
  WeylElement w;
  WeightMultiset counts;  // generator weight -> how many copies
};

// Checks kappa against the parabolic: restriction must equal mu - 2 rho_n_perp
// (OmegaMismatch), kappa must be dominant integral on the Levi simples
// (NotDominantOnLevi), and the dimension comes from the Weyl formula over the
// Levi positive roots.
EModule validate_E(const ReductivePair& pair, const CompatibleParabolic& parab,
                   const Weight& mu, const Weight& kappa);

// The canonical lift of mu - 2 rho_n_perp: pairs to zero against every Levi
// root, so it always validates and has dimension 1.
Weight auto_kappa(const ReductivePair& pair, const CompatibleParabolic& parab,
                  const Weight& mu);

// Weight multiplicity of xi in the m-th symmetric power of the module with
// character n_cap_perp.
Int sym_mult(const CompatibleParabolic& parab, const Weight& xi, const Int& m);

// Sum over all symmetric powers; finite because every generator is strictly
// lex-positive. An empty n_cap_perp gives 1 at xi = 0 and 0 elsewhere.
Int sym_mult_total(const ReductivePair& pair, const CompatibleParabolic& parab,
                   const Weight& xi);

// All w of length i whose shifted target lands in the nonnegative span of the
// generators, each with one explicit partition witness.
std::vector<OccurrenceWitness> occurrence_witnesses(const ReductivePair& pair,
                                                    const CompatibleParabolic& parab,
                                                    const EModule& e, const Weight& delta,
                                                    int i);

// dim E times the total symmetric-power count over all w of length i.
Int occurrence_bound(const ReductivePair& pair, const CompatibleParabolic& parab,
                     const EModule& e, const Weight& delta, int i);

// Alternating sum over degrees of the per-length occurrence counts.
Int euler_multiplicity(const ReductivePair& pair, const CompatibleParabolic& parab,
                       const EModule& e, const Weight& delta);

// True when the minimal type can only occur in the top degree: no occurrence
// witness at mu for any i >= 1.
bool min_type_degree_check(const ReductivePair& pair, const CompatibleParabolic& parab,
                           const EModule& e, const Weight& mu);

Rat vogan_norm_sq(const ReductivePair& pair, const Weight& delta);

// |delta+2rho|^2 split against the mu row: base |mu+2rho|^2, the square of the
// displacement, and twice the cross pairing. balances is the exact identity.
struct NormExpansion {
  Rat total, base, square, cross;
  bool balances;
};
NormExpansion norm_growth_expansion(const ReductivePair& pair, const Weight& mu,
                                    const Weight& delta);

// Candidate k-types delta = mu + nonnegative combination of the generators,
// kept when k-dominant integral with vogan norm <= cutoff; sorted by norm then
// coordinates. A cutoff below the mu row's norm yields an empty table plus a
// warning.
KTypeTable enumerate_ktypes(const ReductivePair& pair, const CompatibleParabolic& parab,
                            const EModule& e, const Weight& mu, const Rat& cutoff);

}  // namespace fseries
