#include "ultralip/presented.hpp"

#include <memory>
#include <vector>

namespace ultralip {

PresentedSpace::PresentedSpace(std::string name, LabelFn labels, DistFn dist,
                               std::optional<bool> spherically_complete,
                               std::optional<bool> proper)
    : name_(std::move(name)),
      labels_(std::move(labels)),
      dist_(std::move(dist)),
      sc_(spherically_complete),
      proper_(proper) {}

std::string PresentedSpace::label(long k) const {
  if (k < 1) fail(Err::IndexOutOfRange, "enumeration starts at 1");
  return labels_(k);
}

Rational PresentedSpace::dist(long i, long j) const {
  if (i < 1 || j < 1) fail(Err::IndexOutOfRange, "enumeration starts at 1");
  if (i == j) return Rational(0);
  return (i < j) ? dist_(i, j) : dist_(j, i);
}

namespace {

// Shared cache of 2^{-k}; the example metrics only ever need these.
struct Pow2Cache {
  std::vector<Rational> vals;
  const Rational& get(long k) {
    while (static_cast<long>(vals.size()) <= k)
      vals.push_back(pow2_inv(vals.size()));
    return vals[k];
  }
};

std::string nat_label(long v) { return std::to_string(v); }

}  // namespace

PresentedSpace builtin_space(const std::string& name) {
  auto cache = std::make_shared<Pow2Cache>();
  if (name == "e1_not_sc") {
    // naturals with d(m,n) = 1 + 2^{-min{m,n}}; s_k carries value k-1
    return PresentedSpace(
        name, [](long k) { return nat_label(k - 1); },
        [cache](long i, long j) -> Rational {
          long m = i - 1, n = j - 1;
          return Rational(1) + cache->get(std::min(m, n));
        },
        false, false);
  }
  if (name == "e2_omega_sc") {
    // same metric with the pseudo-limit omega inserted at position 2
    auto value = [](long k) -> long { return (k == 2) ? -1 : (k >= 3 ? k - 2 : 0); };
    return PresentedSpace(
        name,
        [value](long k) { return k == 2 ? std::string("omega") : nat_label(value(k)); },
        [cache, value](long i, long j) -> Rational {
          long a = value(i), b = value(j);
          if (a == -1) return Rational(1) + cache->get(b);
          if (b == -1) return Rational(1) + cache->get(a);
          return Rational(1) + cache->get(std::min(a, b));
        },
        true, false);
  }
  if (name == "e3_compact") {
    // naturals with d(m,n) = 2^{-min{m,n}}; totally bounded, not complete
    return PresentedSpace(
        name, [](long k) { return nat_label(k - 1); },
        [cache](long i, long j) -> Rational {
          long m = i - 1, n = j - 1;
          return cache->get(std::min(m, n));
        },
        false, false);
  }
  if (name == "discrete_n") {
    return PresentedSpace(
        name, [](long k) { return nat_label(k - 1); },
        [](long, long) { return Rational(1); }, true, false);
  }
  fail(Err::UnknownBuiltin, "'" + name + "'");
}

FiniteSpace truncate(const PresentedSpace& presented, long n) {
  if (n < 1) fail(Err::BadArgument, "truncation depth must be at least 1");
  std::vector<std::string> labels;
  labels.reserve(n);
  for (long k = 1; k <= n; ++k) labels.push_back(presented.label(k));
  std::vector<std::vector<Rational>> dist(n, std::vector<Rational>(n, Rational(0)));
  for (long i = 1; i <= n; ++i)
    for (long j = i + 1; j <= n; ++j)
      dist[i - 1][j - 1] = dist[j - 1][i - 1] = presented.dist(i, j);
  try {
    return FiniteSpace::validate(std::move(labels), std::move(dist));
  } catch (const Error& e) {
    fail(Err::OracleViolation,
         presented.name() + " broke the metric axioms: " + e.what());
  }
}

SpacePtr truncate_shared(const PresentedSpace& presented, long n) {
  return std::make_shared<const FiniteSpace>(truncate(presented, n));
}

}  // namespace ultralip
