#pragma once

#include "ultralip/lipfn.hpp"

namespace ultralip {

// Optimal dual function for a free-space norm; feasible for every pair
// constraint and attaining the value exactly.
struct DualCertificate {
  LipFn optimal;
  Rational value;
};

struct FreeNormResult {
  Rational value;
  DualCertificate certificate;
};

// Exact max of <f, mu> over the unit ball of base-normalized Lipschitz
// functions, by rational simplex; the certificate is re-checked for
// feasibility before returning.
FreeNormResult free_norm_lp(const FreeElement& mu);

// Closed form on the dendrogram's tree realization (edge length times mass
// across the edge, base leaf as sink). Equals free_norm_lp exactly.
// Throws NotUltrametric.
Rational free_norm_tree(const FreeElement& mu);

}  // namespace ultralip
