#include "ultralip/retraction.hpp"

#include <algorithm>
#include <numeric>

namespace ultralip {

Enumeration Enumeration::natural(SpacePtr space) {
  std::vector<int> order(static_cast<std::size_t>(space->size()));
  std::iota(order.begin(), order.end(), 0);
  return of(std::move(space), std::move(order));
}

Enumeration Enumeration::of(SpacePtr space, std::vector<int> order) {
  if (static_cast<int>(order.size()) != space->size())
    fail(Err::BadArgument, "enumeration must list every point once");
  std::vector<char> seen(order.size(), 0);
  for (int p : order) {
    if (p < 0 || p >= space->size()) fail(Err::IndexOutOfRange, "point outside the space");
    if (seen[static_cast<std::size_t>(p)]++) fail(Err::BadArgument, "repeated point in enumeration");
  }
  if (order[0] != kBase) fail(Err::BadArgument, "enumeration must start at the base point");
  Enumeration e;
  e.space = std::move(space);
  e.order = std::move(order);
  return e;
}

Enumeration Enumeration::of_labels(SpacePtr space, const std::vector<std::string>& labels) {
  std::vector<int> order;
  order.reserve(labels.size());
  for (const auto& l : labels) order.push_back(space->index_of(l));
  return of(std::move(space), std::move(order));
}

int Enumeration::s(int k) const {
  if (k < 1 || k > size()) fail(Err::IndexOutOfRange, "s_" + std::to_string(k));
  return order[static_cast<std::size_t>(k - 1)];
}

int Enumeration::position(int point) const {
  for (int k = 0; k < size(); ++k)
    if (order[static_cast<std::size_t>(k)] == point) return k + 1;
  fail(Err::IndexOutOfRange, "point not enumerated");
}

RetractionFamily::RetractionFamily(Enumeration e) : enum_(std::move(e)) {
  const FiniteSpace& s = *enum_.space;
  const int n = enum_.size();
  cache_.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int lvl = 1; lvl <= n; ++lvl) {
    for (int x = 0; x < n; ++x) {
      int best = enum_.s(1);
      Rational bestd = s.dist(x, best);
      for (int k = 2; k <= lvl; ++k) {
        int cand = enum_.s(k);
        const Rational& d = s.dist(x, cand);
        if (d < bestd) {
          best = cand;
          bestd = d;
        }
      }
      cache_[static_cast<std::size_t>(lvl - 1)][static_cast<std::size_t>(x)] = best;
    }
  }
}

int RetractionFamily::retract(int n, int x) const {
  if (n < 1 || n > max_level()) fail(Err::IndexOutOfRange, "r_" + std::to_string(n));
  if (x < 0 || x >= max_level()) fail(Err::IndexOutOfRange, "point outside the space");
  return cache_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(x)];
}

RetractionLawReport check_retraction_laws(const RetractionFamily& family) {
  RetractionLawReport rep;
  const FiniteSpace& s = *family.space();
  const int n = family.max_level();
  for (int lvl = 1; lvl <= n && rep.ok; ++lvl) {
    for (int x = 0; x < n && rep.ok; ++x) {
      for (int y = x + 1; y < n; ++y) {
        if (s.dist(family.retract(lvl, x), family.retract(lvl, y)) > s.dist(x, y)) {
          rep.ok = false;
          rep.first_violation = "r_" + std::to_string(lvl) + " expands the pair (" +
                                s.label(x) + "," + s.label(y) + ")";
          break;
        }
      }
    }
  }
  for (int a = 1; a <= n && rep.ok; ++a) {
    for (int b = 1; b <= n && rep.ok; ++b) {
      const int lo = std::min(a, b);
      for (int x = 0; x < n; ++x) {
        if (family.retract(a, family.retract(b, x)) != family.retract(lo, x)) {
          rep.ok = false;
          rep.first_violation = "composition fails at r_" + std::to_string(a) +
                                " . r_" + std::to_string(b) + " on " + s.label(x);
          break;
        }
      }
    }
  }
  return rep;
}

YWitness y_witness(const RetractionFamily& family, const LipFn& f, const Rational& eps) {
  require_same_space(family.space(), f.space());
  if (eps <= 0) fail(Err::BadArgument, "eps must be positive");
  const FiniteSpace& s = *family.space();
  const int n = family.max_level();
  YWitness out;
  std::optional<std::pair<int, int>> last_bad;
  for (int lvl = 1; lvl <= n; ++lvl) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = x + 1; y < n; ++y) {
        if (family.retract(lvl, x) != family.retract(lvl, y)) continue;
        if (rat_abs(f.value(x) - f.value(y)) > eps * s.dist(x, y)) {
          ok = false;
          last_bad = std::make_pair(x, y);
          break;
        }
      }
    }
    if (ok) {
      out.n = lvl;
      out.binding_pair = last_bad;
      return out;
    }
  }
  fail(Err::BadArgument, "the identity retraction always witnesses");
}

NormingLift norming_lift(const RetractionFamily& family, const std::vector<int>& A,
                         const std::vector<Rational>& values_on_A) {
  SpacePtr space = family.space();
  if (A.size() != values_on_A.size())
    fail(Err::BadArgument, "A and its values differ in length");
  for (std::size_t k = 0; k < A.size(); ++k)
    if (A[k] == kBase && values_on_A[k] != 0)
      fail(Err::BaseValueNonzero, "base value must be 0");
  int level = 1;
  for (int a : A) level = std::max(level, family.enumeration().position(a));
  LipFn hat = mcshane_extend(space, A, values_on_A);
  // restrict the extension to S_level before composing; points outside S_level
  // never influence values, so evaluating hat on retracted points suffices
  std::vector<Rational> values(static_cast<std::size_t>(space->size()));
  for (int x = 0; x < space->size(); ++x)
    values[static_cast<std::size_t>(x)] = hat.value(family.retract(level, x));
  return {LipFn::make(std::move(space), std::move(values)), level};
}

Rational flatness_profile(const LipFn& f, const Rational& delta, const Rational& radius) {
  if (delta <= 0 || radius <= 0) fail(Err::BadArgument, "delta and radius must be positive");
  const FiniteSpace& s = *f.space();
  Rational eps(0);
  for (int x = 0; x < s.size(); ++x) {
    for (int y = x + 1; y < s.size(); ++y) {
      const bool small = s.dist(x, y) < delta;
      const bool outside = s.dist(kBase, x) > radius || s.dist(kBase, y) > radius;
      if (!small && !outside) continue;
      Rational ratio = rat_abs(f.value(x) - f.value(y)) / s.dist(x, y);
      if (ratio > eps) eps = ratio;
    }
  }
  return eps;
}

}  // namespace ultralip
