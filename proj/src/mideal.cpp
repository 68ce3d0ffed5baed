#include "ultralip/mideal.hpp"

#include <algorithm>
#include <random>

#include "ultralip/lp.hpp"
#include "ultralip/retraction.hpp"

namespace ultralip {

namespace {

// Exact row reduction; returns the rank and leaves pivots in place.
int rank_of(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  const int m = static_cast<int>(rows.size());
  if (m == 0) return 0;
  const int n = static_cast<int>(rows[0].size());
  for (int col = 0; col < n && rank < m; ++col) {
    int pivot = -1;
    for (int r = rank; r < m; ++r)
      if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
    const Rational p = rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)];
    for (int r = 0; r < m; ++r) {
      if (r == rank) continue;
      const Rational factor = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] / p;
      if (factor == 0) continue;
      for (int c = 0; c < n; ++c)
        rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] -=
            factor * rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

SubspaceSpec SubspaceSpec::from_basis(SpacePtr space, std::vector<LipFn> basis) {
  for (const auto& b : basis) require_same_space(space, b.space());
  std::vector<std::vector<Rational>> rows;
  for (const auto& b : basis) rows.push_back(b.values());
  if (rank_of(rows) != static_cast<int>(basis.size()))
    fail(Err::DegenerateBasis, "basis functions are linearly dependent");
  SubspaceSpec spec;
  spec.space = std::move(space);
  spec.basis = std::move(basis);
  return spec;
}

SubspaceSpec SubspaceSpec::from_projection(SpacePtr space,
                                           std::vector<std::vector<Rational>> Q) {
  const int n = space->size();
  if (static_cast<int>(Q.size()) != n)
    fail(Err::BadArgument, "projection size does not match the space");
  for (const auto& row : Q)
    if (static_cast<int>(row.size()) != n)
      fail(Err::BadArgument, "projection matrix is not square");
  // idempotence: Q(Qe_j) = Qe_j column by column
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> col(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] = Q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    for (int i = 0; i < n; ++i) {
      Rational acc(0);
      for (int k = 0; k < n; ++k)
        acc += Q[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * col[static_cast<std::size_t>(k)];
      if (acc != col[static_cast<std::size_t>(i)])
        fail(Err::NotIdempotent, "Q^2 != Q");
    }
  }
  // base preservation: (Qf)(base) = 0 whenever f(base) = 0
  for (int j = 0; j < n; ++j)
    if (j != kBase && Q[static_cast<std::size_t>(kBase)][static_cast<std::size_t>(j)] != 0)
      fail(Err::BadArgument, "projection does not preserve the base value");

  // independent columns of Q span the range
  std::vector<LipFn> basis;
  std::vector<std::vector<Rational>> rows;
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> col(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] = Q[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    bool zero = true;
    for (const auto& x : col)
      if (x != 0) zero = false;
    if (zero) continue;
    rows.push_back(col);
    if (rank_of(rows) < static_cast<int>(rows.size())) {
      rows.pop_back();
      continue;
    }
    basis.push_back(LipFn::raw(space, std::move(col)));
  }
  SubspaceSpec spec;
  spec.space = std::move(space);
  spec.basis = std::move(basis);
  spec.projection = std::move(Q);
  return spec;
}

LipFn SubspaceSpec::apply_projection(const LipFn& f) const {
  if (!projection) fail(Err::BadArgument, "no projection attached");
  const int n = space->size();
  std::vector<Rational> out(static_cast<std::size_t>(n), Rational(0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      out[static_cast<std::size_t>(i)] +=
          (*projection)[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] * f.value(k);
  return LipFn::raw(space, std::move(out));
}

ThreeBallResult three_ball_check(const SubspaceSpec& spec, const ThreeBallInstance& inst) {
  SpacePtr space = spec.space;
  for (const auto& z : inst.z) require_same_space(space, z.space());
  require_same_space(space, inst.x.space());
  if (inst.eps <= 0) fail(Err::BadArgument, "eps must be positive");
  for (const auto& z : inst.z)
    if (lip_norm_value(z) > 1) fail(Err::BadArgument, "z_i must lie in the unit ball");
  if (lip_norm_value(inst.x) > 1) fail(Err::BadArgument, "x must lie in the unit ball");

  const int n = space->size();
  const int k = static_cast<int>(spec.basis.size());
  lp::Problem p;
  p.num_vars = k + 1;  // coefficients, then the epigraph variable t
  p.objective.assign(static_cast<std::size_t>(k + 1), Rational(0));
  p.objective.back() = -1;
  for (const auto& zi : inst.z) {
    LipFn base = zi + inst.x;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        const Rational d = space->dist(u, v);
        Rational rhs0 = base.value(u) - base.value(v);
        std::vector<Rational> row(static_cast<std::size_t>(k + 1), Rational(0));
        for (int j = 0; j < k; ++j)
          row[static_cast<std::size_t>(j)] =
              -(spec.basis[static_cast<std::size_t>(j)].value(u) -
                spec.basis[static_cast<std::size_t>(j)].value(v));
        row.back() = -d;
        // (base - sum c_j b_j)(u) - (...)(v) <= t d and its negation
        std::vector<Rational> neg(row);
        for (auto& x : neg) x = -x;
        neg.back() = -d;
        p.add_row(std::move(neg), rhs0);
        p.add_row(std::move(row), -rhs0);
      }
    }
  }
  lp::Solution sol = lp::maximize(p);
  if (sol.status != lp::Status::Optimal)
    fail(Err::BadArgument, "the 3-ball program must have an optimum");
  ThreeBallResult out{LipFn::zero(space), -sol.value, false};
  std::vector<Rational> zv(static_cast<std::size_t>(n), Rational(0));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i)
      zv[static_cast<std::size_t>(i)] += sol.point[static_cast<std::size_t>(j)] *
                                         spec.basis[static_cast<std::size_t>(j)].value(i);
  out.recentering = LipFn::raw(space, std::move(zv));
  out.pass = (out.achieved <= 1 + inst.eps);
  return out;
}

namespace {

Rational m_condition_gap(const SubspaceSpec& spec, const LipFn& f,
                         Rational& nf, Rational& nq, Rational& nr) {
  LipFn qf = spec.apply_projection(f);
  LipFn res = f - qf;
  nf = lip_norm_value(f);
  nq = lip_norm_value(qf);
  nr = lip_norm_value(res);
  Rational mx = std::max(nq, nr);
  return rat_abs(nf - mx);
}

}  // namespace

ProjectionMReport projection_mcheck(const SubspaceSpec& spec, unsigned long seed,
                                    int random_trials) {
  if (!spec.projection) fail(Err::BadArgument, "mcheck needs a projection");
  SpacePtr space = spec.space;
  const int n = space->size();
  ProjectionMReport rep;
  if (n < 2) {
    rep.note = "single point: nothing to violate";
    return rep;
  }
  auto try_fn = [&](const LipFn& f) -> bool {
    if (lip_norm_value(f) == 0) return false;
    Rational nf, nq, nr;
    if (m_condition_gap(spec, f, nf, nq, nr) != 0) {
      rep.violation_found = true;
      rep.violator = f;
      rep.norm_f = nf;
      rep.norm_qf = nq;
      rep.norm_residual = nr;
      return true;
    }
    return false;
  };

  // distance functions d(., x) - d(base, x), both signs
  for (int x = 0; x < n; ++x) {
    std::vector<Rational> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      v[static_cast<std::size_t>(i)] = space->dist(i, x) - space->dist(kBase, x);
    LipFn f = LipFn::make(space, std::move(v));
    if (try_fn(f) || try_fn(-f)) {
      rep.note = "distance-function sweep";
      return rep;
    }
  }
  // indicator lifts: the ratio of a point against the rest of the space
  for (int x = 1; x < n; ++x) {
    Rational nearest = space->dist(x, kBase);
    for (int i = 0; i < n; ++i)
      if (i != x && space->dist(x, i) < nearest) nearest = space->dist(x, i);
    std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
    v[static_cast<std::size_t>(x)] = nearest;
    LipFn f = LipFn::make(space, std::move(v));
    if (try_fn(f) || try_fn(-f)) {
      rep.note = "indicator sweep";
      return rep;
    }
  }
  // unit-ball vertices for tiny spaces: solve (n-1)-subsets of tight pair
  // constraints f(u) - f(v) = +-d(u,v)
  if (n <= 6) {
    struct Pair {
      int u, v;
    };
    std::vector<Pair> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    const int dim = n - 1;
    std::vector<int> idx(static_cast<std::size_t>(dim), 0);
    std::function<bool(int, int)> rec = [&](int from, int k) -> bool {
      if (k == dim) {
        // sign patterns over the chosen pairs
        for (int mask = 0; mask < (1 << dim); ++mask) {
          std::vector<std::vector<Rational>> A;
          std::vector<Rational> b;
          for (int t = 0; t < dim; ++t) {
            const Pair& pr = pairs[static_cast<std::size_t>(idx[static_cast<std::size_t>(t)])];
            std::vector<Rational> row(static_cast<std::size_t>(dim), Rational(0));
            if (pr.u != kBase) row[static_cast<std::size_t>(pr.u - 1)] = 1;
            if (pr.v != kBase) row[static_cast<std::size_t>(pr.v - 1)] -= 1;
            A.push_back(std::move(row));
            b.push_back((mask >> t) & 1 ? Rational(space->dist(pr.u, pr.v))
                                        : Rational(-space->dist(pr.u, pr.v)));
          }
          // exact solve by elimination
          std::vector<Rational> sol(static_cast<std::size_t>(dim), Rational(0));
          std::vector<std::vector<Rational>> M = A;
          for (int t = 0; t < dim; ++t) M[static_cast<std::size_t>(t)].push_back(b[static_cast<std::size_t>(t)]);
          int r = 0;
          bool singular = false;
          for (int c = 0; c < dim && !singular; ++c) {
            int piv = -1;
            for (int rr = r; rr < dim; ++rr)
              if (M[static_cast<std::size_t>(rr)][static_cast<std::size_t>(c)] != 0) {
                piv = rr;
                break;
              }
            if (piv < 0) {
              singular = true;
              break;
            }
            std::swap(M[static_cast<std::size_t>(r)], M[static_cast<std::size_t>(piv)]);
            const Rational pv = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            for (int rr = 0; rr < dim; ++rr) {
              if (rr == r) continue;
              const Rational factor = M[static_cast<std::size_t>(rr)][static_cast<std::size_t>(c)] / pv;
              if (factor == 0) continue;
              for (int cc = 0; cc <= dim; ++cc)
                M[static_cast<std::size_t>(rr)][static_cast<std::size_t>(cc)] -=
                    factor * M[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)];
            }
            ++r;
          }
          if (singular) continue;
          for (int t = 0; t < dim; ++t)
            sol[static_cast<std::size_t>(t)] =
                M[static_cast<std::size_t>(t)].back() / M[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];
          std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
          for (int t = 1; t < n; ++t) v[static_cast<std::size_t>(t)] = sol[static_cast<std::size_t>(t - 1)];
          LipFn f = LipFn::make(space, std::move(v));
          if (lip_norm_value(f) != 1) continue;  // keep genuine vertices only
          if (try_fn(f)) return true;
        }
        return false;
      }
      for (int i = from; i < static_cast<int>(pairs.size()); ++i) {
        idx[static_cast<std::size_t>(k)] = i;
        if (rec(i + 1, k + 1)) return true;
      }
      return false;
    };
    if (rec(0, 0)) {
      rep.note = "unit-ball vertex sweep";
      return rep;
    }
  }
  // randomized trials, deterministic in the seed
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num(-8, 8);
  std::uniform_int_distribution<int> den(1, 8);
  for (int t = 0; t < random_trials; ++t) {
    std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
    for (int i = 1; i < n; ++i) v[static_cast<std::size_t>(i)] = Rational(num(rng), den(rng));
    LipFn f = LipFn::make(space, std::move(v));
    if (lip_norm_value(f) == 0) continue;
    if (try_fn(f)) {
      rep.note = "random trial " + std::to_string(t);
      return rep;
    }
  }
  rep.note = "no violation found";
  return rep;
}

LipFn h_build(const PartitionChain& chain, const LipFn& F, long N, const Rational& R) {
  SpacePtr space = chain.space;
  require_same_space(space, F.space());
  if (R <= 0) fail(Err::BadArgument, "R must be positive");
  if (R < chain.q_pow(N)) fail(Err::BadArgument, "R must be at least q^N");
  const int n = space->size();
  const long cell_level = 2 * N;  // clamped into the chain window below
  std::vector<Rational> values(static_cast<std::size_t>(n), Rational(0));
  for (int x = 0; x < n; ++x) {
    if (space->dist(kBase, x) > R) continue;  // zero outside the closed ball
    const int center = phi_clamped(chain, cell_level, x);
    // cell of x: points within q^{2N} of the center (the center's own cell)
    Rational sup, inf;
    bool first = true;
    const Rational radius = chain.q_pow(cell_level);
    for (int y = 0; y < n; ++y) {
      if (space->dist(center, y) >= radius) continue;
      const Rational& fy = F.value(y);
      if (first || fy > sup) sup = fy;
      if (first || fy < inf) inf = fy;
      first = false;
    }
    values[static_cast<std::size_t>(x)] = (sup + inf) / 2;
  }
  return LipFn::raw(std::move(space), std::move(values));
}

ThreeBallDemoReport three_ball_ultrametric_demo(const PartitionChain& chain,
                                                const LipFn& F,
                                                const std::array<LipFn, 3>& flats,
                                                long N, const Rational& R,
                                                const Rational& eps) {
  SpacePtr space = chain.space;
  require_same_space(space, F.space());
  if (eps <= 0) fail(Err::BadArgument, "eps must be positive");
  const Rational delta = chain.q_pow(N);
  if (delta > eps) fail(Err::BadArgument, "q^N must not exceed eps");
  if (R < delta) fail(Err::BadArgument, "R must be at least q^N");
  if (lip_norm_value(F) > 1) fail(Err::BadArgument, "F must lie in the unit ball");
  for (const auto& f : flats) {
    require_same_space(space, f.space());
    if (lip_norm_value(f) > 1) fail(Err::BadArgument, "f_i must lie in the unit ball");
    if (flatness_profile(f, delta, R) > eps)
      fail(Err::FlatnessViolation, "f_i is not (eps, q^N, R)-flat");
  }
  LipFn h = h_build(chain, F, N, R);
  const Rational fine = chain.q_pow(2 * N);
  ThreeBallDemoReport rep;
  rep.worst_ratio = 0;
  rep.case_worst.fill(Rational(0));
  rep.case_pairs.fill(0);
  const int n = space->size();
  for (const auto& f : flats) {
    LipFn total = f + F - h;
    for (int x = 0; x < n; ++x) {
      for (int y = x + 1; y < n; ++y) {
        const Rational& d = space->dist(x, y);
        Rational ratio = rat_abs(total.value(x) - total.value(y)) / d;
        const bool xin = space->dist(kBase, x) <= R;
        const bool yin = space->dist(kBase, y) <= R;
        int which;
        if (xin && yin && d < fine)
          which = 0;
        else if (!xin && !yin)
          which = 0;
        else if (xin != yin)
          which = 1;
        else if (d < delta)
          which = 2;
        else
          which = 3;
        ++rep.case_pairs[static_cast<std::size_t>(which)];
        if (ratio > rep.case_worst[static_cast<std::size_t>(which)])
          rep.case_worst[static_cast<std::size_t>(which)] = ratio;
        if (ratio > rep.worst_ratio) rep.worst_ratio = ratio;
      }
    }
  }
  rep.pass = (rep.worst_ratio <= 1 + 2 * eps);
  return rep;
}

SpacePtr werner_space(int grid_n) {
  if (grid_n < 1) fail(Err::BadArgument, "grid must have at least one segment");
  std::vector<std::string> labels;
  std::vector<Rational> coords;
  for (int k = 0; k <= grid_n; ++k) {
    Rational c(k, grid_n);
    coords.push_back(c);
    labels.push_back(rat_str(c));
  }
  labels.push_back("p");
  const int n = grid_n + 2;
  std::vector<std::vector<Rational>> dist(static_cast<std::size_t>(n),
                                          std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  for (int i = 0; i <= grid_n; ++i)
    for (int j = i + 1; j <= grid_n; ++j)
      dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          dist[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] =
              rat_abs(coords[static_cast<std::size_t>(j)] - coords[static_cast<std::size_t>(i)]);
  for (int i = 0; i <= grid_n; ++i)
    dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(n - 1)] =
        dist[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i)] = Rational(1, 2);
  return make_space(std::move(labels), std::move(dist));
}

LipFn werner_function(SpacePtr space) {
  const int n = space->size();
  std::vector<Rational> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n - 1; ++i) v[static_cast<std::size_t>(i)] = parse_rational(space->label(i));
  v[static_cast<std::size_t>(n - 1)] = Rational(1, 2);
  return LipFn::make(std::move(space), std::move(v));
}

std::vector<std::vector<Rational>> werner_projection(const FiniteSpace& space) {
  const int n = space.size();
  std::vector<std::vector<Rational>> Q(static_cast<std::size_t>(n),
                                       std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  Q[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)] = 1;  // keep the value at p
  return Q;
}

WernerAudit werner_audit(int grid_n) {
  SpacePtr space = werner_space(grid_n);
  SubspaceSpec spec = SubspaceSpec::from_projection(space, werner_projection(*space));
  LipFn F = werner_function(space);
  LipFn QF = spec.apply_projection(F);
  WernerAudit audit;
  audit.norm_f = lip_norm_value(F);
  audit.norm_qf = lip_norm_value(QF);
  audit.norm_residual = lip_norm_value(F - QF);
  audit.reproduces = (audit.norm_f == 1 && audit.norm_residual == 2);
  return audit;
}

}  // namespace ultralip
