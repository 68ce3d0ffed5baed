#include "ultralip/extremal.hpp"

#include "ultralip/lp.hpp"

namespace ultralip {

ExtremeCandidate build_extreme(const PartitionChain& chain) {
  SpacePtr space = chain.space;
  const int n = space->size();
  if (n < 2) fail(Err::SinglePoint, "no unit sphere on a single point");
  std::vector<Rational> values(static_cast<std::size_t>(n), Rational(0));
  for (int x = 1; x < n; ++x) {
    PhiTrail tr = trail(chain, x);
    Rational acc(0);
    Rational sign(1);
    for (int k = 0; k <= tr.m(); ++k) {
      acc += sign * space->dist(tr.points[static_cast<std::size_t>(k)], x);
      sign = -sign;
    }
    if (acc < 0 || acc > space->dist(kBase, x))
      fail(Err::BadArgument, "alternating sum left [0, d(0,x)]");
    values[static_cast<std::size_t>(x)] = acc;
  }
  LipFn f = LipFn::make(std::move(space), std::move(values));
  if (lip_norm_value(f) != 1)
    fail(Err::BadArgument, "trail construction must have norm one");
  return {std::move(f), chain.q};
}

Rational max_perturbation_norm(const LipFn& f, const Rational& eps) {
  if (eps < 0) fail(Err::BadArgument, "eps must be nonnegative");
  const FiniteSpace& s = *f.space();
  const int n = s.size();
  if (n < 2) return Rational(0);
  // pairwise slack: |g(u)-g(v)| <= (1+eps) d - |f(u)-f(v)|
  std::vector<std::vector<Rational>> w(static_cast<std::size_t>(n),
                                       std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      Rational c = (1 + eps) * s.dist(u, v) - rat_abs(f.value(u) - f.value(v));
      if (c < 0) fail(Err::BadArgument, "f must lie in the (1+eps)-ball");
      w[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
          w[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = c;
    }
  }
  auto sp = lp::all_pairs_shortest(w);
  Rational best(0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      Rational ratio = sp[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] / s.dist(u, v);
      if (ratio > best) best = ratio;
    }
  return best;
}

PerturbationBound perturbation_bound(const ExtremeCandidate& candidate, const Rational& eps) {
  PerturbationBound out;
  out.max_g_norm = max_perturbation_norm(candidate.f, eps);
  const Rational q2 = candidate.q * candidate.q * (1 - candidate.q);
  out.paper_bound = 2 * eps / q2;
  out.holds = (out.max_g_norm <= out.paper_bound);
  out.in_window = (eps <= q2 / 4);
  return out;
}

std::optional<LipFn> lasq_probe(const LipFn& f, const Rational& eps) {
  if (lip_norm_value(f) != 1) fail(Err::NotUnitNorm, "lasq probes need ||f|| = 1");
  if (eps <= 0) fail(Err::BadArgument, "eps must be positive");
  const FiniteSpace& s = *f.space();
  const int n = s.size();
  std::vector<std::vector<Rational>> w(static_cast<std::size_t>(n),
                                       std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      w[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
          w[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] =
              (1 + eps) * s.dist(u, v) - rat_abs(f.value(u) - f.value(v));
  auto sp = lp::all_pairs_shortest(w);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (sp[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] < s.dist(u, v)) continue;
      // g(z) = -shortest(u, z), shifted to the base and scaled to norm one;
      // scaling down stays feasible by convexity
      std::vector<Rational> g(static_cast<std::size_t>(n));
      for (int z = 0; z < n; ++z)
        g[static_cast<std::size_t>(z)] = -sp[static_cast<std::size_t>(u)][static_cast<std::size_t>(z)];
      const Rational shift = g[static_cast<std::size_t>(kBase)];
      for (auto& x : g) x -= shift;
      LipFn witness = LipFn::make(f.space(), std::move(g));
      const Rational norm = lip_norm_value(witness);
      if (norm < 1) continue;
      return witness.scaled(1 / norm);
    }
  }
  return std::nullopt;
}

}  // namespace ultralip
