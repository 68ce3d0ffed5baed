#pragma once

#include <vector>

#include "ultralip/space.hpp"

namespace ultralip {

// Nested center sets C_n with q^n separation whose radius-q^n balls cover
// the space. Levels run over the finite window [n_lo, n_hi] where the chain
// is non-trivial; outside the window the nearest-center map is the identity
// (above) or the constant base map (below).
struct PartitionChain {
  SpacePtr space;
  Rational q;
  long n_lo = 0;
  long n_hi = 0;
  std::vector<std::vector<int>> centers;  // centers[k] = C_{n_lo + k}

  const std::vector<int>& level(long n) const;  // throws LevelOutOfRange
  Rational q_pow(long n) const { return rat_pow(q, n); }
};

// Deterministic greedy realization: scan points in label order, admit a
// point iff it is q^n-separated from everything already admitted, base
// first. Throws NotUltrametric, QOutOfRange.
PartitionChain build_chain(SpacePtr space, const Rational& q);

// Nearest-center map; the unique c in C_n with d(x,c) < q^n.
int phi(const PartitionChain& chain, long n, int x);  // LevelOutOfRange
// Same map extended to all of Z by clamping into [n_lo, n_hi].
int phi_clamped(const PartitionChain& chain, long n, int x);

// Per-point change trail: the distinct values of phi_n(x) as n increases.
struct PhiTrail {
  SpacePtr space;
  Rational q;
  int point = 0;
  std::vector<long> change_levels;  // I_x, ascending
  std::vector<int> points;          // s(x): x_0 = base, ..., x_m = x

  int m() const { return static_cast<int>(change_levels.size()); }
  // i_x(k): level of the k-th trail entry; i_x(0) is one below the first
  // change (0 for the base point, matching its degenerate convention).
  long level_of(int k) const;
};

PhiTrail trail(const PartitionChain& chain, int x);

struct GeometricBound {
  Rational lhs;  // sum of d(x_l, x) from K on
  Rational rhs;  // d(x_K, x) / (q(1-q))
  bool holds = false;
};

// Tail-sum bound along the trail; 0 <= K < m. Throws IndexOutOfRange.
GeometricBound geometric_bound(const PhiTrail& tr, int K);

// First meet index: trails agree (points and distances) strictly below K and
// max{d(x_K,x), d(y_K,y)} <= d(x,y). Throws SamePoint.
int meet_first(const PartitionChain& chain, int x, int y);
// Second meet index: trails agree up to K and
// max{d(x_K,x), d(y_K,y)} <= d(x,y)/q. Throws SamePoint.
int meet_second(const PartitionChain& chain, int x, int y);

}  // namespace ultralip
