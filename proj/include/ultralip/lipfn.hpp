#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ultralip/space.hpp"

namespace ultralip {

// A real-valued function on a finite space, one exact value per point.
// User-facing constructions are base-normalized (value 0 at the base
// point); raw() skips that check for derived functions whose contract only
// involves differences.
class LipFn {
 public:
  static LipFn make(SpacePtr space, std::vector<Rational> values);  // BaseValueNonzero
  static LipFn raw(SpacePtr space, std::vector<Rational> values);
  static LipFn zero(SpacePtr space);

  SpacePtr space() const { return space_; }
  const Rational& value(int i) const { return values_[static_cast<std::size_t>(i)]; }
  const std::vector<Rational>& values() const { return values_; }
  bool base_normalized() const { return values_[kBase] == 0; }

  LipFn operator+(const LipFn& other) const;
  LipFn operator-(const LipFn& other) const;
  LipFn operator-() const;
  LipFn scaled(const Rational& c) const;

 private:
  LipFn(SpacePtr space, std::vector<Rational> values)
      : space_(std::move(space)), values_(std::move(values)) {}
  SpacePtr space_;
  std::vector<Rational> values_;
};

struct NormReport {
  Rational norm;
  std::optional<std::pair<int, int>> argmax;  // i < j, first in index order
};

// Exact max of |f(x)-f(y)|/d(x,y) over unordered pairs.
// Throws SinglePoint when there are no pairs.
NormReport lip_norm(const LipFn& f);
Rational lip_norm_value(const LipFn& f);

// Oriented attaining pair (x,y) with f(x) - f(y) = ||f|| d(x,y).
// Throws ZeroFunction for the zero function.
std::pair<int, int> norm_attainment(const LipFn& f);

// Inf-formula extension of values given on A (base adjoined with value 0);
// preserves the Lipschitz constant of the data exactly.
LipFn mcshane_extend(SpacePtr space, const std::vector<int>& A,
                     const std::vector<Rational>& values_on_A);

// Pointwise maximum; the norm never exceeds the max of the inputs' norms.
LipFn sup_combine(const std::vector<LipFn>& fs);

// A finitely supported signed combination of point evaluations; the base
// coefficient is normalized away.
class FreeElement {
 public:
  explicit FreeElement(SpacePtr space);
  static FreeElement from_coeffs(SpacePtr space, std::map<int, Rational> coeffs);

  SpacePtr space() const { return space_; }
  const std::map<int, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const;
  bool zero() const { return coeffs_.empty(); }

  FreeElement operator+(const FreeElement& other) const;
  FreeElement operator-(const FreeElement& other) const;
  FreeElement scaled(const Rational& c) const;

 private:
  SpacePtr space_;
  std::map<int, Rational> coeffs_;  // support excludes the base point
};

FreeElement delta(SpacePtr space, int x);
// (delta_x - delta_y) / d(x,y); throws SamePoint.
FreeElement molecule(SpacePtr space, int x, int y);

// <f, mu> = sum coeff(x) f(x). Throws SpaceMismatch.
Rational pairing(const LipFn& f, const FreeElement& mu);

void require_same_space(const SpacePtr& a, const SpacePtr& b);

}  // namespace ultralip
