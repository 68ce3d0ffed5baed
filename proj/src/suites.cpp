#include "ultralip/suites.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <thread>

#include "ultralip/extremal.hpp"
#include "ultralip/freenorm.hpp"
#include "ultralip/mideal.hpp"
#include "ultralip/randgen.hpp"
#include "ultralip/witnesses.hpp"

namespace ultralip {

int thread_cap() {
  if (const char* env = std::getenv("ULTRALIP_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

void parallel_trials(int count, const std::function<void(int)>& fn) {
  const int threads = std::min(thread_cap(), count);
  if (threads <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < count;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

namespace {

struct Failure {
  std::mutex mutex;
  bool failed = false;
  std::string what;
  void note(const std::string& msg) {
    std::lock_guard<std::mutex> lock(mutex);
    if (!failed) {
      failed = true;
      what = msg;
    }
  }
};

// ---------------------------------------------------------------- criterion 1

bool crit_werner(std::string& detail) {
  for (int grid : {2, 4, 8, 16}) {
    WernerAudit audit = werner_audit(grid);
    if (!(audit.norm_f == 1 && audit.norm_qf == 1 && audit.norm_residual == 2)) {
      detail = "grid " + std::to_string(grid) + ": ||F||=" + rat_str(audit.norm_f) +
               " ||F-QF||=" + rat_str(audit.norm_residual);
      return false;
    }
  }
  detail = "||F|| = 1 and ||F-QF|| = 2 on grids 2,4,8,16";
  return true;
}

// ---------------------------------------------------------------- criterion 2

bool crit_freenorm(std::string& detail) {
  Failure failure;
  parallel_trials(50, [&](int i) {
    if (failure.failed) return;
    const int points = 2 + i % 7;  // 2..8
    SpacePtr space = gen_ultrametric(2000 + static_cast<std::uint64_t>(i), points);
    // molecules and deltas via the closed form
    for (int x = 0; x < points; ++x) {
      for (int y = 0; y < points; ++y) {
        if (x == y) continue;
        if (free_norm_tree(molecule(space, x, y)) != 1)
          return failure.note("molecule norm != 1");
        if (y == kBase && x != kBase &&
            free_norm_tree(delta(space, x)) != space->dist(x, kBase))
          return failure.note("delta norm != distance to base");
      }
    }
    std::mt19937_64 rng(7000 + static_cast<std::uint64_t>(i));
    for (int e = 0; e < 100; ++e) {
      FreeElement mu = gen_element(space, rng);
      FreeNormResult lpres = free_norm_lp(mu);
      Rational tree = free_norm_tree(mu);
      if (lpres.value != tree)
        return failure.note("engines disagree on space " + std::to_string(i));
      if (pairing(lpres.certificate.optimal, mu) != lpres.value)
        return failure.note("certificate does not attain the value");
    }
  });
  detail = failure.failed ? failure.what : "tree = lp on 50 spaces x 100 elements";
  return !failure.failed;
}

// ---------------------------------------------------------------- criterion 3

const std::vector<Rational>& lemma_qs() {
  static const std::vector<Rational> qs = {Rational(1, 3), Rational(1, 2), Rational(3, 4)};
  return qs;
}

bool check_ball_lemma(const FiniteSpace& s, std::string& msg) {
  const int n = s.size();
  // (1) and (2) straight over triples
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (x == y || x == z || y == z) continue;
        const Rational &a = s.dist(x, z), &b = s.dist(y, z);
        if (a != b) {
          const Rational& mx = a > b ? a : b;
          if (s.dist(x, y) != mx) {
            msg = "ball lemma (1)";
            return false;
          }
        }
        if (s.dist(x, y) < a && s.dist(y, z) < a) {
          msg = "ball lemma (2)";
          return false;
        }
      }
  // radius grid: realized values, midpoints, below the least, beyond the max
  std::vector<Rational> grid;
  auto realized = s.realized_distances();
  if (!realized.empty()) {
    grid.push_back(realized.front() / 2);
    for (std::size_t k = 0; k < realized.size(); ++k) {
      grid.push_back(realized[k]);
      if (k + 1 < realized.size()) grid.push_back((realized[k] + realized[k + 1]) / 2);
    }
    grid.push_back(realized.back() + 1);
  }
  for (int x = 0; x < n; ++x) {
    for (const Rational& r : grid) {
      // (4) clopen surrogate
      Rational below(0);
      for (const Rational& d : realized)
        if (d < r) below = d;
      if (s.open_ball(x, r) != s.closed_ball(x, below)) {
        msg = "ball lemma (4)";
        return false;
      }
      // (3) recentering
      for (int y = 0; y < n; ++y) {
        if (y == x || !(s.dist(x, y) < r)) continue;
        if (s.open_ball(x, r) != s.open_ball(y, r)) {
          msg = "ball lemma (3)";
          return false;
        }
      }
    }
  }
  return true;
}

bool check_partition_lemma(const PartitionChain& chain, std::string& msg) {
  const FiniteSpace& s = *chain.space;
  const int n = s.size();
  for (long lvl = chain.n_lo; lvl <= chain.n_hi; ++lvl) {
    const auto& c = chain.level(lvl);
    const Rational radius = chain.q_pow(lvl);
    bool has_base = false;
    for (int p : c) has_base = has_base || (p == kBase);
    if (!has_base) {
      msg = "partition (a)";
      return false;
    }
    if (lvl < chain.n_hi) {
      const auto& next = chain.level(lvl + 1);
      for (int p : c)
        if (std::find(next.begin(), next.end(), p) == next.end()) {
          msg = "partition (b)";
          return false;
        }
    }
    for (std::size_t a = 0; a < c.size(); ++a)
      for (std::size_t b = a + 1; b < c.size(); ++b)
        if (s.dist(c[a], c[b]) < radius) {
          msg = "partition (c)";
          return false;
        }
    for (int x = 0; x < n; ++x) {
      int covering = 0;
      for (int p : c)
        if (s.dist(x, p) < radius) ++covering;
      if (covering != 1) {
        msg = "partition (d)/uniqueness";
        return false;
      }
    }
  }
  return true;
}

bool check_phi_lemma(const PartitionChain& chain, std::string& msg) {
  const FiniteSpace& s = *chain.space;
  const int n = s.size();
  for (long lvl = chain.n_lo - 2; lvl <= chain.n_hi + 2; ++lvl) {
    const Rational ql = chain.q_pow(lvl);
    for (int x = 0; x < n; ++x) {
      if (phi_clamped(chain, lvl, phi_clamped(chain, lvl + 1, x)) !=
          phi_clamped(chain, lvl, x)) {
        msg = "phi (1)";
        return false;
      }
      for (int y = 0; y < n; ++y) {
        if (x == y) continue;
        const int px = phi_clamped(chain, lvl, x);
        const int py = phi_clamped(chain, lvl, y);
        const Rational dx = s.dist(px, x);
        const Rational dy = s.dist(py, y);
        const Rational mx = dx > dy ? dx : dy;
        if ((px == py) != (s.dist(x, y) <= mx)) {
          msg = "phi (2)";
          return false;
        }
        if ((dx <= s.dist(x, y) || dy <= s.dist(x, y)) && !(mx <= s.dist(x, y))) {
          msg = "phi (3)";
          return false;
        }
        if (px != py) {
          if (s.dist(px, y) != s.dist(x, y) || s.dist(py, x) != s.dist(x, y) ||
              s.dist(x, y) < ql) {
            msg = "phi (4)";
            return false;
          }
        }
        if (s.dist(x, y) < mx && dx != dy) {
          msg = "phi (5)";
          return false;
        }
      }
    }
  }
  return true;
}

bool check_trail_lemma(const PartitionChain& chain, std::string& msg) {
  const FiniteSpace& s = *chain.space;
  const int n = s.size();
  const Rational& q = chain.q;
  for (int x = 0; x < n; ++x) {
    PhiTrail tr = trail(chain, x);
    if ((tr.m() == 0) != (x == kBase)) {
      msg = "trail (1)";
      return false;
    }
    // change levels match the bracketing q^n <= d(phi_{n-1}(x), x) < q^{n-1}
    for (long lvl = chain.n_lo - 1; lvl <= chain.n_hi + 1; ++lvl) {
      const bool in_I =
          std::find(tr.change_levels.begin(), tr.change_levels.end(), lvl) !=
          tr.change_levels.end();
      const Rational d_prev = s.dist(phi_clamped(chain, lvl - 1, x), x);
      const bool bracket = rat_pow(q, lvl) <= d_prev && d_prev < rat_pow(q, lvl - 1);
      if (in_I != bracket) {
        msg = "trail (2)";
        return false;
      }
    }
    if (x != kBase) {
      const long n1 = tr.change_levels.front();
      if (!(rat_pow(q, n1) <= s.dist(kBase, x) && s.dist(kBase, x) < rat_pow(q, n1 - 1))) {
        msg = "trail (3)";
        return false;
      }
      if (phi_clamped(chain, chain.n_hi, x) != x) {
        msg = "trail (4)";
        return false;
      }
      // distances strictly decrease along the trail and the trail ends at x
      if (tr.points.back() != x) {
        msg = "trail end";
        return false;
      }
      for (int k = 1; k <= tr.m(); ++k)
        if (!(s.dist(tr.points[static_cast<std::size_t>(k)], x) <
              s.dist(tr.points[static_cast<std::size_t>(k - 1)], x))) {
          msg = "trail monotone";
          return false;
        }
      // prefix compatibility: the trail of x_k is the (k+1)-prefix
      for (int k = 0; k < tr.m(); ++k) {
        PhiTrail sub = trail(chain, tr.points[static_cast<std::size_t>(k)]);
        if (sub.m() != k) {
          msg = "trail prefix length";
          return false;
        }
        for (int l = 0; l <= k; ++l)
          if (sub.points[static_cast<std::size_t>(l)] != tr.points[static_cast<std::size_t>(l)]) {
            msg = "trail prefix";
            return false;
          }
      }
      // geometric tail bound at every K
      for (int K = 0; K < tr.m(); ++K)
        if (!geometric_bound(tr, K).holds) {
          msg = "geometric bound";
          return false;
        }
    }
  }
  // meet lemmas on every pair
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      PhiTrail tx = trail(chain, x), ty = trail(chain, y);
      const Rational& dxy = s.dist(x, y);
      int K1 = meet_first(chain, x, y);
      if (K1 > tx.m() || K1 > ty.m()) {
        msg = "meet_first range";
        return false;
      }
      for (int k = 0; k < K1; ++k) {
        if (tx.points[static_cast<std::size_t>(k)] != ty.points[static_cast<std::size_t>(k)] ||
            s.dist(tx.points[static_cast<std::size_t>(k)], x) !=
                s.dist(ty.points[static_cast<std::size_t>(k)], y)) {
          msg = "meet_first prefix";
          return false;
        }
      }
      {
        const Rational dx = s.dist(tx.points[static_cast<std::size_t>(K1)], x);
        const Rational dy = s.dist(ty.points[static_cast<std::size_t>(K1)], y);
        if (!((dx > dy ? dx : dy) <= dxy)) {
          msg = "meet_first bound";
          return false;
        }
      }
      int K2 = meet_second(chain, x, y);
      if (K2 > tx.m() || K2 > ty.m()) {
        msg = "meet_second range";
        return false;
      }
      for (int k = 0; k <= K2; ++k)
        if (tx.points[static_cast<std::size_t>(k)] != ty.points[static_cast<std::size_t>(k)]) {
          msg = "meet_second prefix";
          return false;
        }
      {
        const Rational dx = s.dist(tx.points[static_cast<std::size_t>(K2)], x);
        const Rational dy = s.dist(ty.points[static_cast<std::size_t>(K2)], y);
        if (!((dx > dy ? dx : dy) <= dxy / chain.q)) {
          msg = "meet_second bound";
          return false;
        }
      }
    }
  }
  return true;
}

bool crit_lemmas(std::string& detail) {
  Failure failure;
  parallel_trials(200, [&](int i) {
    if (failure.failed) return;
    const int points = 2 + i % 9;  // 2..10
    SpacePtr space = gen_ultrametric(3000 + static_cast<std::uint64_t>(i), points);
    std::string msg;
    if (!check_ball_lemma(*space, msg))
      return failure.note(msg + " on seed " + std::to_string(3000 + i));
    {
      RetractionFamily family(Enumeration::natural(space));
      RetractionLawReport laws = check_retraction_laws(family);
      if (!laws.ok) return failure.note("retraction laws: " + laws.first_violation);
    }
    for (const Rational& q : lemma_qs()) {
      PartitionChain chain = build_chain(space, q);
      if (!check_partition_lemma(chain, msg) || !check_phi_lemma(chain, msg) ||
          !check_trail_lemma(chain, msg))
        return failure.note(msg + " on seed " + std::to_string(3000 + i) + " q=" + rat_str(q));
    }
  });
  detail = failure.failed
               ? failure.what
               : "ball/partition/retraction/phi/trail/meet lemmas on 200 spaces x 3 q";
  return !failure.failed;
}

// ---------------------------------------------------------------- criterion 4

bool crit_extreme(std::string& detail) {
  Failure failure;
  const std::vector<Rational> qs = {Rational(1, 3), Rational(1, 2), Rational(2, 3)};
  const std::vector<Rational> eps_list = {Rational(1, 10), Rational(1, 100), Rational(1, 1000)};
  parallel_trials(200, [&](int i) {
    if (failure.failed) return;
    const int points = 2 + i % 9;
    SpacePtr space = gen_ultrametric(4000 + static_cast<std::uint64_t>(i), points);
    const Rational& q = qs[static_cast<std::size_t>(i % 3)];
    ExtremeCandidate cand = build_extreme(build_chain(space, q));
    if (lip_norm_value(cand.f) != 1) return failure.note("candidate norm != 1");
    if (max_perturbation_norm(cand.f, Rational(0)) != 0)
      return failure.note("nonzero perturbation at eps = 0");
    Rational prev(0);
    for (const Rational& eps : eps_list) {
      PerturbationBound pb = perturbation_bound(cand, eps);
      if (pb.in_window && !pb.holds)
        return failure.note("perturbation bound fails at eps = " + rat_str(eps) +
                            " q = " + rat_str(q));
      // the feasible set only grows with eps
      if (eps == eps_list.front()) {
        prev = pb.max_g_norm;
      } else if (pb.max_g_norm > prev) {
        return failure.note("perturbation norm not monotone in eps");
      } else {
        prev = pb.max_g_norm;
      }
    }
  });
  detail = failure.failed ? failure.what
                          : "||f|| = 1 and the 2eps/(q^2(1-q)) bound on 200 spaces";
  return !failure.failed;
}

// ---------------------------------------------------------------- criterion 5

bool crit_mideal_demo(std::string& detail) {
  Failure failure;
  parallel_trials(200, [&](int i) {
    if (failure.failed) return;
    const int points = 2 + i % 11;  // 2..12
    SpacePtr space = gen_ultrametric(5000 + static_cast<std::uint64_t>(i), points);
    const Rational q(1, 2);
    PartitionChain chain = build_chain(space, q);
    const Rational eps = (i % 2 == 0) ? Rational(1, 4) : Rational(1, 2);
    long N = 1;
    while (chain.q_pow(N) > eps) ++N;
    const Rational delta = chain.q_pow(N);
    Rational R = space->max_dist_to_base();
    if (i % 3 == 1 && space->size() > 2) R = R / 2;
    if (R < delta) R = delta;
    std::mt19937_64 rng(8000 + static_cast<std::uint64_t>(i));
    LipFn F = gen_lipfn(space, rng, true);
    std::array<LipFn, 3> flats = {LipFn::zero(space), LipFn::zero(space), LipFn::zero(space)};
    for (auto& f : flats) {
      LipFn g = gen_lipfn(space, rng, true);
      Rational profile = flatness_profile(g, delta, R);
      if (profile > eps) g = g.scaled(eps / profile);
      f = g;
    }
    ThreeBallDemoReport rep = three_ball_ultrametric_demo(chain, F, flats, N, R, eps);
    if (!rep.pass)
      return failure.note("worst ratio " + rat_str(rep.worst_ratio) + " on seed " +
                          std::to_string(5000 + i));
  });
  detail = failure.failed ? failure.what : "worst ratio <= 1 + 2 eps on 200 spaces";
  return !failure.failed;
}

// ---------------------------------------------------------------- criterion 6

bool crit_spherical(std::string& detail) {
  PresentedSpace e1 = builtin_space("e1_not_sc");
  PseudoCauchyReport rep1 = pseudo_cauchy_search(e1, 1000);
  if (rep1.subsequence.size() < 100) {
    detail = "pseudo-Cauchy prefix shorter than 100";
    return false;
  }
  if (!rep1.pseudo_limits.empty()) {
    detail = "unexpected pseudo-limit on e1";
    return false;
  }
  // gaps must match 1 + 2^{-min} on the labels (enumeration index - 1)
  for (std::size_t k = 0; k + 1 < rep1.subsequence.size(); ++k) {
    long a = rep1.subsequence[k] - 1, b = rep1.subsequence[k + 1] - 1;
    Rational expected = Rational(1) + pow2_inv(static_cast<unsigned long>(std::min(a, b)));
    if (rep1.gaps[k] != expected) {
      detail = "gap mismatch on e1";
      return false;
    }
  }
  PresentedSpace e2 = builtin_space("e2_omega_sc");
  PseudoCauchyReport rep2 = pseudo_cauchy_search(e2, 100);
  bool found_omega = false;
  for (long z : rep2.pseudo_limits) found_omega = found_omega || (e2.label(z) == "omega");
  if (!found_omega) {
    detail = "omega not found as pseudo-limit";
    return false;
  }
  PresentedSpace e3 = builtin_space("e3_compact");
  std::vector<long> idx;
  for (long k = 2; k <= 21; ++k) idx.push_back(k);  // labels 1..20
  CauchyGapReport gaps3 = cauchy_gap_check(e3, idx);
  for (std::size_t k = 0; k < gaps3.gaps.size(); ++k) {
    Rational expected = pow2_inv(static_cast<unsigned long>(k + 1));
    if (gaps3.gaps[k] != expected) {
      detail = "gap mismatch on e3";
      return false;
    }
  }
  if (!gaps3.cauchy_evidence) {
    detail = "e3 gaps should look Cauchy";
    return false;
  }
  CauchyGapReport gaps1 = cauchy_gap_check(e1, idx);
  if (gaps1.cauchy_evidence || !(gaps1.min_gap > 1)) {
    detail = "e1 gaps should stay above 1";
    return false;
  }
  detail = "e1 prefix length " + std::to_string(rep1.subsequence.size()) +
           ", omega recovered on e2, gap closed forms exact";
  return true;
}

// ---------------------------------------------------------------- criterion 7

bool crit_nonduality(std::string& detail) {
  PresentedSpace e1 = builtin_space("e1_not_sc");
  const long depth = 30;
  auto chain = ball_chain_search(e1, depth, Rational(1));
  if (!chain || chain->depth() < 2) {
    detail = "no nested chain found on e1";
    return false;
  }
  SpacePtr trunc = truncate_shared(e1, depth);
  std::vector<MolecularDecomposition> phis;
  {
    // delta at the first chain center
    phis.push_back(canonical_decomposition(
        delta(trunc, static_cast<int>(chain->centers[0] - 1))));
    phis.push_back(MolecularDecomposition{});  // the zero element
    MolecularDecomposition geo;
    for (int i = 0; i + 1 < 10 && i + 1 < chain->depth(); ++i)
      geo.terms.push_back({pow2_inv(static_cast<unsigned long>(i + 1)),
                           static_cast<int>(chain->centers[static_cast<std::size_t>(i)] - 1),
                           static_cast<int>(chain->centers[static_cast<std::size_t>(i + 1)] - 1)});
    phis.push_back(std::move(geo));
    std::mt19937_64 rng(7700);
    for (int t = 0; t < 20; ++t)
      phis.push_back(canonical_decomposition(gen_element(trunc, rng)));
  }
  for (std::size_t k = 0; k < phis.size(); ++k) {
    NondualityAudit audit = nonduality_audit(phis[k], *chain, trunc);
    if (!audit.claim1_holds) {
      detail = "claim 1 fails on audit " + std::to_string(k);
      return false;
    }
    if (!audit.claim2_holds) {
      detail = "claim 2 bound fails on audit " + std::to_string(k);
      return false;
    }
    if (!audit.fg_norms_ok) {
      detail = "constructed functions leave the unit ball on audit " + std::to_string(k);
      return false;
    }
  }
  detail = std::to_string(phis.size()) + " audits: claims 1-2 and unit norms exact";
  return true;
}

// ---------------------------------------------------------------- criterion 8

bool crit_membed(std::string& detail) {
  PresentedSpace dn = builtin_space("discrete_n");
  SpacePtr trunc = truncate_shared(dn, 12);
  std::vector<int> subseq;
  for (int k = 2; k <= 12; ++k) subseq.push_back(k);
  MEmbedWitnessReport rep =
      m_embed_witness(trunc, Rational(1), Rational(1), 1, subseq, 4);
  if (!rep.norms_ok) {
    detail = "witness norms broke";
    return false;
  }
  if (!(rep.bound == Rational(1, 3)) || !rep.bound_holds) {
    detail = "excess " + rat_str(rep.excess) + " vs bound " + rat_str(rep.bound);
    return false;
  }
  detail = "min-max optimum " + rat_str(rep.optimum) + ", excess " + rat_str(rep.excess) +
           " >= 1/3";
  return true;
}

// ---------------------------------------------------------------- criterion 9

bool crit_norming_lift(std::string& detail) {
  Failure failure;
  parallel_trials(100, [&](int i) {
    if (failure.failed) return;
    const int points = 2 + i % 9;
    SpacePtr space = gen_ultrametric(9000 + static_cast<std::uint64_t>(i), points);
    std::mt19937_64 rng(9500 + static_cast<std::uint64_t>(i));
    // alternate natural and shuffled enumerations (base stays first)
    std::vector<int> order(static_cast<std::size_t>(points));
    for (int k = 0; k < points; ++k) order[static_cast<std::size_t>(k)] = k;
    if (i % 2 == 1)
      for (int k = points - 1; k > 1; --k)
        std::swap(order[static_cast<std::size_t>(k)],
                  order[static_cast<std::size_t>(1 + rng() % static_cast<std::uint64_t>(k))]);
    RetractionFamily family(Enumeration::of(space, order));
    // random nonempty A avoiding the base, random small values
    std::vector<int> A;
    std::vector<Rational> vals;
    for (int p = 1; p < points; ++p) {
      if (rng() % 2 == 0) continue;
      A.push_back(p);
      Rational v(static_cast<long>(rng() % 9) - 4, 1L << (rng() % 3));
      v.canonicalize();
      vals.push_back(v);
    }
    if (A.empty()) {
      A.push_back(1 + static_cast<int>(rng() % static_cast<std::uint64_t>(points - 1)));
      vals.push_back(Rational(1));
    }
    NormingLift lift = norming_lift(family, A, vals);
    // exact norm preservation against the data's Lipschitz constant
    Rational lip(0);
    for (std::size_t a = 0; a < A.size(); ++a) {
      Rational r = rat_abs(vals[a]) / space->dist(A[a], kBase);
      if (r > lip) lip = r;
      for (std::size_t b = a + 1; b < A.size(); ++b) {
        Rational rr = rat_abs(vals[a] - vals[b]) / space->dist(A[a], A[b]);
        if (rr > lip) lip = rr;
      }
    }
    if (lip_norm_value(lift.g) != lip)
      return failure.note("lift norm != data constant on seed " + std::to_string(9000 + i));
    for (std::size_t a = 0; a < A.size(); ++a)
      if (lift.g.value(A[a]) != vals[a])
        return failure.note("lift does not restrict to the data");
    for (int x = 0; x < points; ++x)
      for (int y = x + 1; y < points; ++y)
        if (family.retract(lift.level, x) == family.retract(lift.level, y) &&
            lift.g.value(x) != lift.g.value(y))
          return failure.note("lift distinguishes retraction-identified points");
  });
  detail = failure.failed ? failure.what
                          : "||g|| = ||f_A|| and r_N-compatibility on 100 lifts";
  return !failure.failed;
}

}  // namespace

CriterionResult run_criterion(int id) {
  CriterionResult res;
  res.id = id;
  bool ok = false;
  std::string detail;
  const auto start = std::chrono::steady_clock::now();
  switch (id) {
    case 1:
      res.name = "werner-counterexample";
      res.budget = 1.0;
      ok = crit_werner(detail);
      break;
    case 2:
      res.name = "free-norm-engines-agree";
      res.budget = 60.0;
      ok = crit_freenorm(detail);
      break;
    case 3:
      res.name = "lemma-battery";
      res.budget = 120.0;
      ok = crit_lemmas(detail);
      break;
    case 4:
      res.name = "strongly-extreme-perturbation";
      res.budget = 300.0;
      ok = crit_extreme(detail);
      break;
    case 5:
      res.name = "three-ball-demo";
      res.budget = 300.0;
      ok = crit_mideal_demo(detail);
      break;
    case 6:
      res.name = "presented-space-searches";
      res.budget = 10.0;
      ok = crit_spherical(detail);
      break;
    case 7:
      res.name = "nonduality-audit";
      res.budget = 30.0;
      ok = crit_nonduality(detail);
      break;
    case 8:
      res.name = "m-embedding-failure";
      res.budget = 60.0;
      ok = crit_membed(detail);
      break;
    case 9:
      res.name = "norming-lift";
      res.budget = 30.0;
      ok = crit_norming_lift(detail);
      break;
    default:
      fail(Err::BadArgument, "criteria run from 1 to 9");
  }
  const auto stop = std::chrono::steady_clock::now();
  res.seconds = std::chrono::duration<double>(stop - start).count();
  res.detail = detail;
  res.pass = ok && res.seconds < res.budget;
  if (ok && res.seconds >= res.budget) res.detail += " [over budget]";
  return res;
}

std::vector<int> suite_criteria(const std::string& name) {
  if (name == "lemmas") return {3, 9};
  if (name == "freenorm") return {2};
  if (name == "mideal") return {1, 5};
  if (name == "extreme") return {4};
  if (name == "spherical") return {6, 7};
  if (name == "membed") return {8};
  if (name == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9};
  fail(Err::UnknownSuite, "'" + name + "'");
}

std::vector<CriterionResult> run_suite(const std::string& name) {
  std::vector<CriterionResult> out;
  for (int id : suite_criteria(name)) out.push_back(run_criterion(id));
  return out;
}

}  // namespace ultralip
