#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ultralip/lipfn.hpp"
#include "ultralip/presented.hpp"
#include "ultralip/retraction.hpp"

namespace ultralip {

// Outcome of the depth-bounded pseudo-Cauchy search. All indices are
// 1-based enumeration positions.
struct PseudoCauchyReport {
  std::vector<long> subsequence;
  std::vector<Rational> gaps;  // strictly decreasing consecutive distances
  // points (outside the subsequence) whose distances to it strictly
  // decrease; members of the subsequence are excluded because the final
  // element always qualifies vacuously on a truncation
  std::vector<long> pseudo_limits;
  // true when the greedy stopped with indices left but none feasible
  bool extension_blocked = false;
  // true when the subsequence consumed the whole truncation tail
  bool depth_exhausted = false;
};

// Longest greedy pseudo-Cauchy subsequence of s_1..s_depth: each start index
// is tried in order, extension picks the smallest-distance feasible point
// (smallest index on ties), the longest result wins (earliest start on
// ties). Then scans the truncation for pseudo-limits.
PseudoCauchyReport pseudo_cauchy_search(const PresentedSpace& presented, long depth);

struct CauchyGapReport {
  std::vector<Rational> gaps;
  Rational min_gap;
  bool strictly_decreasing = false;
  // finite surrogate for "gaps tend to 0": the last gap dropped to at most
  // a quarter of the first
  bool cauchy_evidence = false;
};

CauchyGapReport cauchy_gap_check(const PresentedSpace& presented,
                                 const std::vector<long>& subsequence);

// Strictly nested open balls with radii bounded below; centers are the
// least enumeration index in each ball, radii the least realized value
// generating the set, so radii strictly decrease along the chain.
struct BallChain {
  std::vector<long> centers;    // enumeration indices
  std::vector<Rational> radii;  // strictly decreasing
  Rational alpha;               // final radius
  std::vector<long> final_ball;
  // the final ball holds nothing but its own center at this depth
  bool empty_beyond_center = false;

  long depth() const { return static_cast<long>(centers.size()); }
};

// Longest strictly nested chain of open balls with radii >= min_alpha among
// centers s_1..s_depth and realized radii; none when no chain of length >= 2
// exists. Ball containment is laminar on ultrametric spaces, so the longest
// chain is a root-to-leaf path of the containment forest.
std::optional<BallChain> ball_chain_search(const PresentedSpace& presented,
                                           long depth, const Rational& min_alpha);

// One positive term of a molecular decomposition.
struct MoleculeTerm {
  Rational lambda;  // > 0
  int p = 0;
  int q = 0;
};

struct MolecularDecomposition {
  std::vector<MoleculeTerm> terms;
  FreeElement to_element(SpacePtr space) const;
  Rational total_mass() const;  // sum of lambdas
};

// Routes every coefficient through the base point: coeff c at x becomes
// |c| d(x,0) times the molecule between x and the base, oriented by sign.
MolecularDecomposition canonical_decomposition(const FreeElement& mu);

// Finite-depth ledger for the non-duality argument.
struct NondualityAudit {
  std::vector<std::vector<int>> annuli;  // A_n as point indices, n = 1..L-1
  std::vector<std::vector<int>> i_sets;  // molecule indices with p in A_n
  std::vector<std::vector<int>> j_sets;  // molecule indices with q in A_n
  std::vector<Rational> beta;
  std::vector<int> positive_levels;  // K = levels with beta > 0
  Rational alpha;
  bool base_outside_first_ball = true;
  bool claim1_holds = true;             // cross-annulus distances >= r_{n+1}
  bool claim2_holds = true;             // sum |beta| <= (2/alpha) sum lambda
  Rational claim2_lhs, claim2_rhs;
  bool fg_norms_ok = true;              // every f_n, g_n has norm <= 1
  struct LevelLedger {
    Rational r_n;
    Rational norm_delta_minus_phi;      // ||delta_{x_n} - phi||
    Rational f_pairing;                 // f_n(delta_{x_n} - phi)
    Rational g_pairing;                 // g_n(phi - delta_{x_n})
    bool hypothesis_holds = false;      // ||delta_{x_n} - phi|| < r_n
  };
  std::vector<LevelLedger> levels;
  Rational sum_beta_positive;           // sum of beta_k over K
  Rational weighted_sum;                // sum r_{k+1} beta_k over K
  bool all_hypotheses_hold = false;
  bool weighted_sum_le_alpha = false;
  std::string verdict;
};

// Runs every finite piece of the bookkeeping for a candidate phi against a
// nested ball chain on a truncation. Throws SupportOutsideTruncation.
NondualityAudit nonduality_audit(const MolecularDecomposition& phi,
                                 const BallChain& chain, SpacePtr truncation);

struct MEmbedWitnessReport {
  std::vector<LipFn> f_i;
  std::optional<LipFn> F;
  bool norms_ok = true;          // ||f_i|| = 1, ||F|| <= 1, F(s_{n_i}) = d(s_{n_i}, s_N)
  Rational optimum;              // min over the witness-bounded surrogate of Y
  Rational excess;               // optimum - 1
  Rational bound;                // delta / (3R)
  bool bound_holds = false;      // excess >= bound
};

// Prop-4.14-style witness: builds the peak functions and their sup, then
// solves the exact min-max over functions factoring through r_K (the
// finite-dimensional stand-in for Y at witness scale K).
// Throws WitnessConditionsFail if the subsequence breaks the Lemma-4.13
// conditions on the truncation.
MEmbedWitnessReport m_embed_witness(SpacePtr truncation, const Rational& delta,
                                    const Rational& R, int N,
                                    const std::vector<int>& subsequence,
                                    int witness_scale);

struct NotProperSequence {
  Rational delta;
  Rational R;
  int N = 0;
  std::vector<int> subsequence;  // enumeration indices
};

// Searches the truncation for the Lemma-4.13 data: the first N (ascending)
// with at least two indices n > N satisfying r_{n-1}(s_n) = s_N; delta and R
// are the attained min and max of d(s_n, s_N) over the subsequence.
std::optional<NotProperSequence> not_proper_sequence(const PresentedSpace& presented,
                                                     long depth);

}  // namespace ultralip
