#include "ultralip/hierarchy.hpp"

#include <algorithm>

namespace ultralip {

const std::vector<int>& PartitionChain::level(long n) const {
  if (n < n_lo || n > n_hi) fail(Err::LevelOutOfRange, "level " + std::to_string(n));
  return centers[static_cast<std::size_t>(n - n_lo)];
}

PartitionChain build_chain(SpacePtr space, const Rational& q) {
  if (!space->is_ultrametric())
    fail(Err::NotUltrametric, "partition chains need an ultrametric space");
  if (!(q > 0 && q < 1)) fail(Err::QOutOfRange, rat_str(q));
  PartitionChain chain;
  chain.space = space;
  chain.q = q;
  const int n = space->size();
  if (n == 1) {
    chain.n_lo = chain.n_hi = 0;
    chain.centers = {{kBase}};
    return chain;
  }
  const Rational maxd = space->max_dist_to_base();
  const Rational mind = space->min_positive_dist();
  // largest level with q^n > maxd
  long lo = 0;
  Rational p(1);
  while (!(p > maxd)) {
    --lo;
    p /= q;
  }
  while (p * q > maxd) {
    ++lo;
    p *= q;
  }
  // smallest level with q^n <= mind
  long hi = lo;
  Rational ph = p;
  while (!(ph <= mind)) {
    ++hi;
    ph *= q;
  }
  chain.n_lo = lo;
  chain.n_hi = hi;
  Rational radius = p;
  for (long lvl = lo; lvl <= hi; ++lvl) {
    std::vector<int> admitted;
    for (int x = 0; x < n; ++x) {
      bool ok = true;
      for (int c : admitted) {
        if (space->dist(x, c) < radius) {
          ok = false;
          break;
        }
      }
      if (ok) admitted.push_back(x);
    }
    chain.centers.push_back(std::move(admitted));
    radius *= q;
  }
  return chain;
}

namespace {

int phi_at_level(const PartitionChain& chain, long n, int x) {
  const Rational radius = chain.q_pow(n);
  const FiniteSpace& s = *chain.space;
  for (int c : chain.level(n))
    if (s.dist(x, c) < radius) return c;
  fail(Err::BadArgument, "no center covers point " + s.label(x));
}

}  // namespace

int phi(const PartitionChain& chain, long n, int x) {
  if (n < chain.n_lo || n > chain.n_hi)
    fail(Err::LevelOutOfRange, "level " + std::to_string(n));
  return phi_at_level(chain, n, x);
}

int phi_clamped(const PartitionChain& chain, long n, int x) {
  if (n >= chain.n_hi) return x;
  if (n <= chain.n_lo) return kBase;
  return phi_at_level(chain, n, x);
}

long PhiTrail::level_of(int k) const {
  if (k < 0 || k > m()) fail(Err::IndexOutOfRange, "trail index " + std::to_string(k));
  if (k == 0) return change_levels.empty() ? 0 : change_levels.front() - 1;
  return change_levels[static_cast<std::size_t>(k - 1)];
}

PhiTrail trail(const PartitionChain& chain, int x) {
  PhiTrail tr;
  tr.space = chain.space;
  tr.q = chain.q;
  tr.point = x;
  tr.points.push_back(kBase);
  int prev = kBase;
  for (long n = chain.n_lo; n <= chain.n_hi; ++n) {
    int cur = phi_at_level(chain, n, x);
    if (cur != prev) {
      tr.change_levels.push_back(n);
      tr.points.push_back(cur);
      prev = cur;
    }
  }
  return tr;
}

GeometricBound geometric_bound(const PhiTrail& tr, int K) {
  if (K < 0 || K >= tr.m())
    fail(Err::IndexOutOfRange, "K must satisfy 0 <= K < m");
  GeometricBound b;
  b.lhs = 0;
  for (int l = K; l <= tr.m(); ++l)
    b.lhs += tr.space->dist(tr.points[static_cast<std::size_t>(l)], tr.point);
  b.rhs = tr.space->dist(tr.points[static_cast<std::size_t>(K)], tr.point) /
          (tr.q * (Rational(1) - tr.q));
  b.holds = (b.lhs <= b.rhs);
  return b;
}

int meet_first(const PartitionChain& chain, int x, int y) {
  if (x == y) fail(Err::SamePoint, "meet of a point with itself");
  const FiniteSpace& s = *chain.space;
  const Rational dxy = s.dist(x, y);
  // smallest level where the approximation of x has come within d(x,y)
  long N = chain.n_lo;
  while (N <= chain.n_hi && !(s.dist(phi_clamped(chain, N, x), x) <= dxy)) ++N;
  if (N == chain.n_lo) return 0;
  // N is a change level of x; K is its position in the trail of x
  PhiTrail tx = trail(chain, x);
  for (int k = 1; k <= tx.m(); ++k)
    if (tx.change_levels[static_cast<std::size_t>(k - 1)] == N) return k;
  fail(Err::BadArgument, "meet level is not a change level");
}

int meet_second(const PartitionChain& chain, int x, int y) {
  if (x == y) fail(Err::SamePoint, "meet of a point with itself");
  // smallest level where the approximations of x and y part ways
  long N = chain.n_lo;
  while (N <= chain.n_hi &&
         phi_clamped(chain, N, x) == phi_clamped(chain, N, y))
    ++N;
  if (N > chain.n_hi) fail(Err::BadArgument, "approximations never separate");
  PhiTrail tx = trail(chain, x);
  for (int k = 1; k <= tx.m(); ++k)
    if (tx.change_levels[static_cast<std::size_t>(k - 1)] == N) return k - 1;
  PhiTrail ty = trail(chain, y);
  for (int k = 1; k <= ty.m(); ++k)
    if (ty.change_levels[static_cast<std::size_t>(k - 1)] == N) return k - 1;
  fail(Err::BadArgument, "separation level is not a change level");
}

}  // namespace ultralip
