#pragma once

#include <optional>

#include "ultralip/hierarchy.hpp"
#include "ultralip/lipfn.hpp"

namespace ultralip {

// Unit-norm function built from alternating trail distances; strongly
// extreme with the quantitative bound below.
struct ExtremeCandidate {
  LipFn f;
  Rational q;
};

// f(x) = alternating sum of d(x_k, x) along the trail of x.
// Throws SinglePoint on one-point spaces.
ExtremeCandidate build_extreme(const PartitionChain& chain);

struct PerturbationBound {
  Rational max_g_norm;   // exact max of ||g|| over ||f+-g|| <= 1 + eps
  Rational paper_bound;  // 2 eps / (q^2 (1-q))
  bool holds = false;
  bool in_window = false;  // eps <= q^2(1-q)/4, where the bound is asserted
};

// The feasible set {g : ||f+-g|| <= 1+eps} is cut out by the pairwise
// bounds |g(u)-g(v)| <= (1+eps) d(u,v) - |f(u)-f(v)|, so each per-pair
// maximization is an exact shortest-path value; the generic simplex route
// is kept as a cross-check oracle in the tests.
PerturbationBound perturbation_bound(const ExtremeCandidate& candidate, const Rational& eps);

// Exact max over pairs (x,y) of max{g(x)-g(y) : ||f+-g|| <= 1+eps}/d(x,y).
Rational max_perturbation_norm(const LipFn& f, const Rational& eps);

// A norm-one companion g with ||f +- g|| <= 1 + eps, when one exists;
// nullopt is a certificate that every feasible g has norm < 1.
// Throws NotUnitNorm unless ||f|| = 1.
std::optional<LipFn> lasq_probe(const LipFn& f, const Rational& eps);

}  // namespace ultralip
