#include "ultralip/witnesses.hpp"

#include <algorithm>
#include <map>

#include "ultralip/freenorm.hpp"
#include "ultralip/lp.hpp"

namespace ultralip {

PseudoCauchyReport pseudo_cauchy_search(const PresentedSpace& presented, long depth) {
  if (depth < 3) fail(Err::BadArgument, "depth must be at least 3");
  PseudoCauchyReport best;
  long best_len = 0;
  for (long start = 1; start <= depth; ++start) {
    if (depth - start + 1 <= best_len) break;  // cannot beat the incumbent
    std::vector<long> seq{start};
    std::vector<Rational> gaps;
    bool blocked = false;
    long cur = start;
    for (;;) {
      long pick = -1;
      Rational pick_d;
      bool any_candidate = false;
      for (long j = cur + 1; j <= depth; ++j) {
        any_candidate = true;
        Rational d = presented.dist(cur, j);
        if (!gaps.empty() && !(d < gaps.back())) continue;
        if (pick < 0 || d < pick_d) {
          pick = j;
          pick_d = d;
        }
      }
      if (pick < 0) {
        blocked = any_candidate;
        break;
      }
      seq.push_back(pick);
      gaps.push_back(pick_d);
      cur = pick;
    }
    if (static_cast<long>(seq.size()) > best_len) {
      best_len = static_cast<long>(seq.size());
      best.subsequence = std::move(seq);
      best.gaps = std::move(gaps);
      best.extension_blocked = blocked;
      best.depth_exhausted = (cur == depth);
    }
  }
  // pseudo-limit scan over points outside the subsequence
  std::vector<char> member(static_cast<std::size_t>(depth + 1), 0);
  for (long k : best.subsequence) member[static_cast<std::size_t>(k)] = 1;
  for (long z = 1; z <= depth; ++z) {
    if (member[static_cast<std::size_t>(z)]) continue;
    bool ok = true;
    Rational prev;
    bool have_prev = false;
    for (long k : best.subsequence) {
      Rational d = presented.dist(k, z);
      if (have_prev && !(d < prev)) {
        ok = false;
        break;
      }
      prev = std::move(d);
      have_prev = true;
    }
    if (ok) best.pseudo_limits.push_back(z);
  }
  return best;
}

CauchyGapReport cauchy_gap_check(const PresentedSpace& presented,
                                 const std::vector<long>& subsequence) {
  if (subsequence.size() < 2) fail(Err::BadArgument, "subsequence needs length >= 2");
  for (std::size_t k = 0; k < subsequence.size(); ++k) {
    if (subsequence[k] < 1) fail(Err::IndexOutOfRange, "enumeration starts at 1");
    if (k > 0 && subsequence[k] <= subsequence[k - 1])
      fail(Err::BadArgument, "indices must strictly increase (one-to-one enumeration)");
  }
  CauchyGapReport rep;
  for (std::size_t k = 0; k + 1 < subsequence.size(); ++k)
    rep.gaps.push_back(presented.dist(subsequence[k], subsequence[k + 1]));
  rep.min_gap = rep.gaps[0];
  rep.strictly_decreasing = true;
  for (std::size_t k = 0; k < rep.gaps.size(); ++k) {
    if (rep.gaps[k] < rep.min_gap) rep.min_gap = rep.gaps[k];
    if (k > 0 && !(rep.gaps[k] < rep.gaps[k - 1])) rep.strictly_decreasing = false;
  }
  rep.cauchy_evidence =
      rep.strictly_decreasing && rep.gaps.back() * 4 <= rep.gaps.front();
  return rep;
}

std::optional<BallChain> ball_chain_search(const PresentedSpace& presented,
                                           long depth, const Rational& min_alpha) {
  if (min_alpha <= 0) fail(Err::BadArgument, "min_alpha must be positive");
  if (depth < 1) fail(Err::BadArgument, "depth must be at least 1");
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> dist(static_cast<std::size_t>(depth),
                                          std::vector<Rational>(static_cast<std::size_t>(depth), Rational(0)));
  for (long k = 1; k <= depth; ++k) labels.push_back(presented.label(k));
  for (long i = 1; i <= depth; ++i)
    for (long j = i + 1; j <= depth; ++j)
      dist[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] =
          dist[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i - 1)] =
              presented.dist(i, j);
  if (depth == 1) return std::nullopt;
  Dendrogram dend = to_dendrogram(labels, dist);  // balls = node leaf sets

  // realized radii (the internal heights), sorted
  std::vector<Rational> heights;
  for (int v = 0; v < dend.node_count(); ++v)
    if (!dend.node(v).leaf()) heights.push_back(dend.node(v).height);
  std::sort(heights.begin(), heights.end());
  heights.erase(std::unique(heights.begin(), heights.end()), heights.end());

  // map leaf labels back to enumeration indices
  std::map<std::string, long> enum_index;
  for (long k = 1; k <= depth; ++k) enum_index[labels[static_cast<std::size_t>(k - 1)]] = k;

  struct Info {
    bool representable = false;
    Rational radius;
    long min_leaf = 0;          // smallest enumeration index in the set
    std::vector<long> leaves;   // enumeration indices
    int best_child = -1;
    long chain_len = 0;
  };
  std::vector<Info> info(static_cast<std::size_t>(dend.node_count()));

  // bottom-up: leaf sets, representability, longest chain below
  std::function<void(int, const Rational*)> walk = [&](int v, const Rational* parent_h) {
    const auto& nd = dend.node(v);
    Info& in = info[static_cast<std::size_t>(v)];
    if (nd.leaf()) {
      in.leaves = {enum_index[nd.label]};
    } else {
      for (int c : nd.children) {
        walk(c, &nd.height);
        auto& cl = info[static_cast<std::size_t>(c)].leaves;
        in.leaves.insert(in.leaves.end(), cl.begin(), cl.end());
      }
      std::sort(in.leaves.begin(), in.leaves.end());
    }
    in.min_leaf = in.leaves.front();
    // an open ball realizes this set iff some realized radius r >= min_alpha
    // lies in (height(v), height(parent)]
    const Rational low = nd.leaf() ? Rational(0) : nd.height;
    auto it = std::upper_bound(heights.begin(), heights.end(), low);
    while (it != heights.end() && *it < min_alpha) ++it;
    if (it != heights.end() && (!parent_h || *it <= *parent_h)) {
      in.representable = true;
      in.radius = *it;
    }
    long below = 0;
    int pick = -1;
    if (!nd.leaf()) {
      for (int c : nd.children) {
        const Info& ci = info[static_cast<std::size_t>(c)];
        if (ci.chain_len > below ||
            (ci.chain_len == below && pick >= 0 &&
             ci.min_leaf < info[static_cast<std::size_t>(pick)].min_leaf)) {
          below = ci.chain_len;
          pick = c;
        }
      }
    }
    in.best_child = pick;
    in.chain_len = below + (in.representable ? 1 : 0);
  };
  walk(dend.root(), nullptr);

  if (info[static_cast<std::size_t>(dend.root())].chain_len < 2) return std::nullopt;

  BallChain chain;
  int v = dend.root();
  while (v >= 0) {
    const Info& in = info[static_cast<std::size_t>(v)];
    if (in.representable) {
      chain.centers.push_back(in.min_leaf);
      chain.radii.push_back(in.radius);
      chain.final_ball = in.leaves;
    }
    v = in.best_child;
  }
  chain.alpha = chain.radii.back();
  chain.empty_beyond_center =
      (chain.final_ball.size() == 1 && chain.final_ball[0] == chain.centers.back());
  return chain;
}

FreeElement MolecularDecomposition::to_element(SpacePtr space) const {
  std::map<int, Rational> coeffs;
  for (const auto& t : terms) {
    Rational w = t.lambda / space->dist(t.p, t.q);
    coeffs[t.p] += w;
    coeffs[t.q] -= w;
  }
  return FreeElement::from_coeffs(std::move(space), std::move(coeffs));
}

Rational MolecularDecomposition::total_mass() const {
  Rational s(0);
  for (const auto& t : terms) s += t.lambda;
  return s;
}

MolecularDecomposition canonical_decomposition(const FreeElement& mu) {
  MolecularDecomposition dec;
  const FiniteSpace& s = *mu.space();
  for (const auto& [p, c] : mu.coeffs()) {
    if (c > 0)
      dec.terms.push_back({Rational(c * s.dist(p, kBase)), p, kBase});
    else
      dec.terms.push_back({Rational(-c * s.dist(p, kBase)), kBase, p});
  }
  return dec;
}

namespace {

Rational element_norm(const FreeElement& mu) {
  if (mu.space()->is_ultrametric()) return free_norm_tree(mu);
  return free_norm_lp(mu).value;
}

}  // namespace

NondualityAudit nonduality_audit(const MolecularDecomposition& phi,
                                 const BallChain& chain, SpacePtr truncation) {
  const FiniteSpace& s = *truncation;
  const int n = s.size();
  const long L = chain.depth();
  if (L < 2) fail(Err::BadArgument, "audits need a chain of length at least 2");
  for (const auto& t : phi.terms) {
    if (t.p < 0 || t.p >= n || t.q < 0 || t.q >= n)
      fail(Err::SupportOutsideTruncation, "molecule endpoint beyond the truncation");
    if (t.lambda <= 0) fail(Err::BadArgument, "molecule weights must be positive");
    if (t.p == t.q) fail(Err::SamePoint, "degenerate molecule");
  }
  std::vector<int> centers;
  for (long c : chain.centers) {
    if (c < 1 || c > n) fail(Err::BadArgument, "chain center beyond the truncation");
    centers.push_back(static_cast<int>(c - 1));
  }

  NondualityAudit audit;
  audit.alpha = chain.radii.back();

  // balls, nesting, and the standing assumption that the base sits outside
  std::vector<std::vector<char>> in_ball(static_cast<std::size_t>(L),
                                         std::vector<char>(static_cast<std::size_t>(n), 0));
  for (long k = 0; k < L; ++k) {
    for (int x = 0; x < n; ++x)
      in_ball[static_cast<std::size_t>(k)][static_cast<std::size_t>(x)] =
          s.dist(centers[static_cast<std::size_t>(k)], x) < chain.radii[static_cast<std::size_t>(k)];
    if (k > 0)
      for (int x = 0; x < n; ++x)
        if (in_ball[static_cast<std::size_t>(k)][static_cast<std::size_t>(x)] &&
            !in_ball[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(x)])
          fail(Err::BadArgument, "chain balls are not nested on the truncation");
  }
  audit.base_outside_first_ball = !in_ball[0][static_cast<std::size_t>(kBase)];
  if (!audit.base_outside_first_ball)
    fail(Err::BadArgument, "the base point must lie outside the first ball");

  // annuli A_k = B_k \ B_{k+1} for k = 1..L-1 (0-based k-1)
  std::vector<int> annulus_of(static_cast<std::size_t>(n), -1);
  for (long k = 0; k + 1 < L; ++k) {
    std::vector<int> ann;
    for (int x = 0; x < n; ++x)
      if (in_ball[static_cast<std::size_t>(k)][static_cast<std::size_t>(x)] &&
          !in_ball[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(x)]) {
        ann.push_back(x);
        annulus_of[static_cast<std::size_t>(x)] = static_cast<int>(k);
      }
    audit.annuli.push_back(std::move(ann));
  }

  // claim 1: a point in A_k and a point elsewhere are r_{k+2}-separated
  for (long k = 0; k + 1 < L && audit.claim1_holds; ++k) {
    for (int x : audit.annuli[static_cast<std::size_t>(k)]) {
      for (int y = 0; y < n; ++y) {
        if (annulus_of[static_cast<std::size_t>(y)] == static_cast<int>(k)) continue;
        if (s.dist(x, y) < chain.radii[static_cast<std::size_t>(k + 1)]) {
          audit.claim1_holds = false;
          break;
        }
      }
      if (!audit.claim1_holds) break;
    }
  }

  // index sets and beta
  const int T = static_cast<int>(phi.terms.size());
  Rational sum_abs_beta(0);
  for (long k = 0; k + 1 < L; ++k) {
    std::vector<int> is, js;
    Rational beta(0);
    for (int i = 0; i < T; ++i) {
      const auto& t = phi.terms[static_cast<std::size_t>(i)];
      const Rational w = t.lambda / s.dist(t.p, t.q);
      if (annulus_of[static_cast<std::size_t>(t.p)] == static_cast<int>(k)) {
        is.push_back(i + 1);
        beta += w;
      }
      if (annulus_of[static_cast<std::size_t>(t.q)] == static_cast<int>(k)) {
        js.push_back(i + 1);
        beta -= w;
      }
    }
    audit.i_sets.push_back(std::move(is));
    audit.j_sets.push_back(std::move(js));
    sum_abs_beta += rat_abs(beta);
    if (beta > 0) audit.positive_levels.push_back(static_cast<int>(k + 1));
    audit.beta.push_back(std::move(beta));
  }

  // claim 2 (finite form)
  audit.claim2_lhs = sum_abs_beta;
  audit.claim2_rhs = Rational(2) / audit.alpha * phi.total_mass();
  audit.claim2_holds = (audit.claim2_lhs <= audit.claim2_rhs);

  FreeElement phi_elem = phi.to_element(truncation);
  const Rational r1 = chain.radii.front();

  audit.all_hypotheses_hold = true;
  for (long lvl = 1; lvl <= L; ++lvl) {
    // K_lvl = positive levels strictly below lvl
    std::vector<char> in_K(static_cast<std::size_t>(L), 0);
    for (int k : audit.positive_levels)
      if (k < lvl) in_K[static_cast<std::size_t>(k)] = 1;

    std::vector<Rational> fv(static_cast<std::size_t>(n), Rational(0));
    std::vector<Rational> gv(static_cast<std::size_t>(n), Rational(0));
    for (int x = 0; x < n; ++x) {
      const int k = annulus_of[static_cast<std::size_t>(x)];
      if (k >= 0 && in_K[static_cast<std::size_t>(k + 1)]) {
        fv[static_cast<std::size_t>(x)] = r1 - chain.radii[static_cast<std::size_t>(k + 1)];
        gv[static_cast<std::size_t>(x)] = chain.radii[static_cast<std::size_t>(k + 1)];
      } else if (in_ball[0][static_cast<std::size_t>(x)]) {
        fv[static_cast<std::size_t>(x)] = r1;
      }
    }
    LipFn f_lvl = LipFn::make(truncation, std::move(fv));
    LipFn g_lvl = LipFn::make(truncation, std::move(gv));
    if (n >= 2 && (lip_norm_value(f_lvl) > 1 || lip_norm_value(g_lvl) > 1))
      audit.fg_norms_ok = false;

    NondualityAudit::LevelLedger led;
    led.r_n = chain.radii[static_cast<std::size_t>(lvl - 1)];
    FreeElement diff = delta(truncation, centers[static_cast<std::size_t>(lvl - 1)]) - phi_elem;
    led.norm_delta_minus_phi = element_norm(diff);
    led.f_pairing = pairing(f_lvl, diff);
    led.g_pairing = pairing(g_lvl, phi_elem - delta(truncation, centers[static_cast<std::size_t>(lvl - 1)]));
    led.hypothesis_holds = (led.norm_delta_minus_phi < led.r_n);
    if (!led.hypothesis_holds) audit.all_hypotheses_hold = false;
    audit.levels.push_back(std::move(led));
  }

  audit.sum_beta_positive = 0;
  audit.weighted_sum = 0;
  for (int k : audit.positive_levels) {
    audit.sum_beta_positive += audit.beta[static_cast<std::size_t>(k - 1)];
    audit.weighted_sum +=
        chain.radii[static_cast<std::size_t>(k)] * audit.beta[static_cast<std::size_t>(k - 1)];
  }
  audit.weighted_sum_le_alpha = (audit.weighted_sum <= audit.alpha);

  if (!audit.all_hypotheses_hold) {
    long bad = 1;
    for (; bad <= L; ++bad)
      if (!audit.levels[static_cast<std::size_t>(bad - 1)].hypothesis_holds) break;
    audit.verdict = "no contradiction forced: ||delta_{x_n} - phi|| < r_n fails at level " +
                    std::to_string(bad);
  } else if (audit.sum_beta_positive >= 1 && audit.weighted_sum_le_alpha) {
    audit.verdict = "contradiction exhibited: positive betas sum to at least 1 "
                    "while the weighted sum stays below alpha";
  } else {
    audit.verdict = "hypotheses hold on the truncation; no finite contradiction";
  }
  return audit;
}

MEmbedWitnessReport m_embed_witness(SpacePtr truncation, const Rational& delta,
                                    const Rational& R, int N,
                                    const std::vector<int>& subsequence,
                                    int witness_scale) {
  const FiniteSpace& s = *truncation;
  const int n = s.size();
  if (delta <= 0 || R <= 0) fail(Err::BadArgument, "delta and R must be positive");
  if (N < 1 || N > n) fail(Err::IndexOutOfRange, "N beyond the truncation");
  if (witness_scale < 1 || witness_scale > n)
    fail(Err::IndexOutOfRange, "witness scale beyond the truncation");
  if (subsequence.empty()) fail(Err::BadArgument, "empty subsequence");
  RetractionFamily family(Enumeration::natural(truncation));
  const int sN = family.enumeration().s(N);

  for (std::size_t i = 0; i < subsequence.size(); ++i) {
    int ni = subsequence[i];
    if (ni < 2 || ni > n) fail(Err::IndexOutOfRange, "subsequence index beyond the truncation");
    if (i > 0 && ni <= subsequence[i - 1])
      fail(Err::WitnessConditionsFail, "subsequence indices must strictly increase");
    if (ni <= N) fail(Err::WitnessConditionsFail, "subsequence must stay above N");
    const int sni = family.enumeration().s(ni);
    const Rational& d = s.dist(sni, sN);
    if (d < delta || d > R)
      fail(Err::WitnessConditionsFail,
           "d(s_" + std::to_string(ni) + ", s_" + std::to_string(N) + ") leaves [delta, R]");
    if (family.retract(ni - 1, sni) != sN)
      fail(Err::WitnessConditionsFail,
           "r_" + std::to_string(ni - 1) + "(s_" + std::to_string(ni) + ") != s_" + std::to_string(N));
  }

  MEmbedWitnessReport rep;
  for (int ni : subsequence) {
    const int sni = family.enumeration().s(ni);
    const Rational peak = s.dist(sni, sN);
    std::vector<Rational> fv(static_cast<std::size_t>(n), Rational(0));
    for (int x = 0; x < n; ++x)
      if (family.retract(ni, x) == sni) fv[static_cast<std::size_t>(x)] = peak;
    rep.f_i.push_back(LipFn::make(truncation, std::move(fv)));
  }
  rep.F = sup_combine(rep.f_i);
  rep.norms_ok = true;
  for (const auto& f : rep.f_i)
    if (lip_norm_value(f) != 1) rep.norms_ok = false;
  if (lip_norm_value(*rep.F) > 1) rep.norms_ok = false;
  for (std::size_t i = 0; i < subsequence.size(); ++i) {
    const int sni = family.enumeration().s(subsequence[i]);
    if (rep.F->value(sni) != s.dist(sni, sN)) rep.norms_ok = false;
  }
  if (rep.F->value(sN) != 0) rep.norms_ok = false;

  // exact min-max over g factoring through r_K: g = sum c_j [r_K(x) = s_j]
  const int K = witness_scale;
  std::vector<int> fiber(static_cast<std::size_t>(n), 0);  // retraction target position
  for (int x = 0; x < n; ++x)
    fiber[static_cast<std::size_t>(x)] = family.enumeration().position(family.retract(K, x));
  lp::Problem p;
  p.num_vars = K;  // c_2..c_K and the epigraph variable t (c_1 pinned to 0)
  p.objective.assign(static_cast<std::size_t>(K), Rational(0));
  p.objective.back() = -1;  // minimize t
  const LipFn& f1 = rep.f_i.front();
  for (int sign = 0; sign < 2; ++sign) {
    LipFn base = sign == 0 ? (f1 + *rep.F) : (*rep.F - f1);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        Rational rhs0 = base.value(u) - base.value(v);
        std::vector<Rational> row(static_cast<std::size_t>(K), Rational(0));
        auto coef = [&](int x, const Rational& w) {
          int pos = fiber[static_cast<std::size_t>(x)];
          if (pos >= 2) row[static_cast<std::size_t>(pos - 2)] += w;
        };
        coef(u, Rational(-1));
        coef(v, Rational(1));
        row.back() = -s.dist(u, v);
        p.add_row(row, -rhs0);   // -(g(u)-g(v)) - t d <= -(base(u)-base(v))
        for (auto& x : row) x = -x;
        row.back() = -s.dist(u, v);
        p.add_row(std::move(row), rhs0);
      }
    }
  }
  lp::Solution sol = lp::maximize(p);
  if (sol.status != lp::Status::Optimal)
    fail(Err::BadArgument, "the min-max program must have an optimum");
  rep.optimum = -sol.value;
  rep.excess = rep.optimum - 1;
  rep.bound = delta / (3 * R);
  rep.bound_holds = (rep.excess >= rep.bound);
  return rep;
}

std::optional<NotProperSequence> not_proper_sequence(const PresentedSpace& presented,
                                                     long depth) {
  if (depth < 3) fail(Err::BadArgument, "depth must be at least 3");
  SpacePtr trunc = truncate_shared(presented, depth);
  RetractionFamily family(Enumeration::natural(trunc));
  const int n = trunc->size();
  for (int N = 1; N <= n; ++N) {
    const int sN = family.enumeration().s(N);
    std::vector<int> subseq;
    for (int m = std::max(N + 1, 2); m <= n; ++m)
      if (family.retract(m - 1, family.enumeration().s(m)) == sN) subseq.push_back(m);
    if (subseq.size() < 2) continue;
    NotProperSequence out;
    out.N = N;
    out.subsequence = subseq;
    out.delta = trunc->dist(family.enumeration().s(subseq[0]), sN);
    out.R = out.delta;
    for (int m : subseq) {
      const Rational& d = trunc->dist(family.enumeration().s(m), sN);
      if (d < out.delta) out.delta = d;
      if (d > out.R) out.R = d;
    }
    return out;
  }
  return std::nullopt;
}

}  // namespace ultralip
