#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ultralip/lipfn.hpp"

namespace ultralip {

// A fixed ordering s_1, s_2, ... of the points with s_1 = base. Everything
// built on retractions depends on it, so it is always explicit.
struct Enumeration {
  SpacePtr space;
  std::vector<int> order;  // order[k-1] = point index of s_k; order[0] = base

  static Enumeration natural(SpacePtr space);
  static Enumeration of(SpacePtr space, std::vector<int> order);
  static Enumeration of_labels(SpacePtr space, const std::vector<std::string>& labels);

  int size() const { return static_cast<int>(order.size()); }
  int s(int k) const;         // 1-based
  int position(int point) const;  // 1-based
};

// Nearest-point retractions r_n onto the first n points of the enumeration,
// ties broken towards the smallest enumeration index. Caches are built
// eagerly; the family is immutable afterwards.
class RetractionFamily {
 public:
  explicit RetractionFamily(Enumeration e);

  const Enumeration& enumeration() const { return enum_; }
  SpacePtr space() const { return enum_.space; }
  int max_level() const { return enum_.size(); }
  int retract(int n, int x) const;  // r_n(x); throws IndexOutOfRange

 private:
  Enumeration enum_;
  std::vector<std::vector<int>> cache_;  // cache_[n-1][x]
};

struct RetractionLawReport {
  bool ok = true;
  std::string first_violation;
};

// 1-Lipschitzness of every r_n plus the composition law r_n . r_m = r_min.
RetractionLawReport check_retraction_laws(const RetractionFamily& family);

struct YWitness {
  int n = 0;  // minimal level at which the implication holds
  // pair that defeated level n-1, when n > 1
  std::optional<std::pair<int, int>> binding_pair;
};

// Smallest N with: r_N(x) = r_N(y) implies |f(x)-f(y)| <= eps d(x,y).
// Always exists on a finite space since the top retraction is the identity.
YWitness y_witness(const RetractionFamily& family, const LipFn& f, const Rational& eps);

// McShane extension of values on A (base adjoined at 0) composed with the
// first retraction whose range covers A; preserves the Lipschitz constant
// of the data exactly and factors through r_N.
struct NormingLift {
  LipFn g;
  int level = 0;  // the N with A inside S_N
};
NormingLift norming_lift(const RetractionFamily& family, const std::vector<int>& A,
                         const std::vector<Rational>& values_on_A);

struct FlatnessProfile {
  Rational eps;
  Rational delta;
  Rational radius;
};

// Smallest eps with |f(x)-f(y)| <= eps d(x,y) whenever d(x,y) < delta or one
// endpoint lies outside the closed ball of the given radius at the base.
Rational flatness_profile(const LipFn& f, const Rational& delta, const Rational& radius);

}  // namespace ultralip
