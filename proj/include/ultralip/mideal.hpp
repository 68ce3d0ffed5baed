#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ultralip/hierarchy.hpp"
#include "ultralip/lipfn.hpp"

namespace ultralip {

// A subspace of the Lipschitz functions, by independent basis or by an
// idempotent base-preserving projection on value vectors.
struct SubspaceSpec {
  SpacePtr space;
  std::vector<LipFn> basis;
  std::optional<std::vector<std::vector<Rational>>> projection;

  // Throws DegenerateBasis on dependent input.
  static SubspaceSpec from_basis(SpacePtr space, std::vector<LipFn> basis);
  // Throws NotIdempotent; extracts an independent basis of the range.
  static SubspaceSpec from_projection(SpacePtr space,
                                      std::vector<std::vector<Rational>> Q);

  LipFn apply_projection(const LipFn& f) const;
};

struct ThreeBallInstance {
  std::array<LipFn, 3> z;
  LipFn x;
  Rational eps;
};

struct ThreeBallResult {
  LipFn recentering;   // the z in Z realizing the optimum
  Rational achieved;   // min over Z of max_i ||z_i + x - z||
  bool pass = false;   // achieved <= 1 + eps
};

// Exact epigraph program for the 3-ball inequality.
ThreeBallResult three_ball_check(const SubspaceSpec& spec, const ThreeBallInstance& inst);

struct ProjectionMReport {
  bool violation_found = false;
  std::optional<LipFn> violator;
  Rational norm_f, norm_qf, norm_residual;  // for the violator
  std::string note;
};

// Searches for f with ||f|| != max{||Qf||, ||f - Qf||}: deterministic sweep
// over distance functions, point indicators and (on spaces of at most 6
// points) the vertices of the unit ball, then seeded random trials.
ProjectionMReport projection_mcheck(const SubspaceSpec& spec, unsigned long seed,
                                    int random_trials);

// Midpoint-of-range flattening of F on the level-2N cells inside the closed
// radius-R ball at the base; zero outside. Requires R >= q^N.
// The cell midpoints need not vanish at the base, so the result may fail
// base normalization; only differences of h enter the 3-ball estimates.
LipFn h_build(const PartitionChain& chain, const LipFn& F, long N, const Rational& R);

struct ThreeBallDemoReport {
  Rational worst_ratio;
  bool pass = false;  // worst <= 1 + 2 eps
  // I: same fine cell or both outside; II: one in, one out;
  // III: fine-to-mid range; IV: distance at least q^N
  std::array<Rational, 4> case_worst;
  std::array<long, 4> case_pairs;
};

// Verifies ||f_i + F - h|| <= 1 + 2 eps pair by pair with the four-case
// split. Preconditions: ||F|| <= 1, ||f_i|| <= 1, q^N <= eps, and each f_i
// (eps, q^N, R)-flat; throws FlatnessViolation / BadArgument.
ThreeBallDemoReport three_ball_ultrametric_demo(const PartitionChain& chain,
                                                const LipFn& F,
                                                const std::array<LipFn, 3>& flats,
                                                long N, const Rational& R,
                                                const Rational& eps);

// Grid discretization of the unit segment with an off-segment point "p" at
// distance 1/2 from everything.
SpacePtr werner_space(int grid_n);
LipFn werner_function(SpacePtr space);          // x on the segment, 1/2 at p
std::vector<std::vector<Rational>> werner_projection(const FiniteSpace& space);

struct WernerAudit {
  Rational norm_f;         // expected 1
  Rational norm_qf;        // expected 1
  Rational norm_residual;  // expected 2
  bool reproduces = false; // norm_f = 1 and norm_residual = 2
};

WernerAudit werner_audit(int grid_n);

}  // namespace ultralip
