#include "ultralip/lipfn.hpp"

#include <algorithm>

namespace ultralip {

void require_same_space(const SpacePtr& a, const SpacePtr& b) {
  if (a.get() != b.get()) fail(Err::SpaceMismatch, "operands live on different spaces");
}

LipFn LipFn::make(SpacePtr space, std::vector<Rational> values) {
  if (static_cast<int>(values.size()) != space->size())
    fail(Err::BadArgument, "value count does not match point count");
  if (values[kBase] != 0)
    fail(Err::BaseValueNonzero, "value at the base point must be 0");
  return LipFn(std::move(space), std::move(values));
}

LipFn LipFn::raw(SpacePtr space, std::vector<Rational> values) {
  if (static_cast<int>(values.size()) != space->size())
    fail(Err::BadArgument, "value count does not match point count");
  return LipFn(std::move(space), std::move(values));
}

LipFn LipFn::zero(SpacePtr space) {
  std::vector<Rational> v(static_cast<std::size_t>(space->size()), Rational(0));
  return LipFn(std::move(space), std::move(v));
}

LipFn LipFn::operator+(const LipFn& other) const {
  require_same_space(space_, other.space_);
  std::vector<Rational> v(values_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.values_[i];
  return LipFn(space_, std::move(v));
}

LipFn LipFn::operator-(const LipFn& other) const {
  require_same_space(space_, other.space_);
  std::vector<Rational> v(values_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= other.values_[i];
  return LipFn(space_, std::move(v));
}

LipFn LipFn::operator-() const {
  std::vector<Rational> v(values_);
  for (auto& x : v) x = -x;
  return LipFn(space_, std::move(v));
}

LipFn LipFn::scaled(const Rational& c) const {
  std::vector<Rational> v(values_);
  for (auto& x : v) x *= c;
  return LipFn(space_, std::move(v));
}

NormReport lip_norm(const LipFn& f) {
  const FiniteSpace& s = *f.space();
  if (s.size() < 2) fail(Err::SinglePoint, "a norm needs at least one pair");
  NormReport rep;
  rep.norm = 0;
  for (int i = 0; i < s.size(); ++i) {
    for (int j = i + 1; j < s.size(); ++j) {
      Rational ratio = rat_abs(f.value(i) - f.value(j)) / s.dist(i, j);
      if (!rep.argmax || ratio > rep.norm) {
        rep.norm = ratio;
        rep.argmax = std::make_pair(i, j);
      }
    }
  }
  return rep;
}

Rational lip_norm_value(const LipFn& f) { return lip_norm(f).norm; }

std::pair<int, int> norm_attainment(const LipFn& f) {
  NormReport rep = lip_norm(f);
  if (rep.norm == 0) fail(Err::ZeroFunction, "the zero function attains nothing");
  auto [i, j] = *rep.argmax;
  return (f.value(i) >= f.value(j)) ? std::make_pair(i, j) : std::make_pair(j, i);
}

LipFn mcshane_extend(SpacePtr space, const std::vector<int>& A,
                     const std::vector<Rational>& values_on_A) {
  if (A.size() != values_on_A.size())
    fail(Err::BadArgument, "A and its values differ in length");
  // data = A together with the base at value 0
  std::vector<int> pts;
  std::vector<Rational> vals;
  bool saw_base = false;
  for (std::size_t k = 0; k < A.size(); ++k) {
    if (A[k] < 0 || A[k] >= space->size())
      fail(Err::IndexOutOfRange, "point outside the space");
    if (A[k] == kBase) {
      saw_base = true;
      if (values_on_A[k] != 0)
        fail(Err::BaseValueNonzero, "base value must be 0");
    }
    pts.push_back(A[k]);
    vals.push_back(values_on_A[k]);
  }
  if (!saw_base) {
    pts.push_back(kBase);
    vals.push_back(Rational(0));
  }
  Rational lip(0);
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      if (pts[a] == pts[b]) {
        if (vals[a] != vals[b]) fail(Err::BadArgument, "conflicting values on A");
        continue;
      }
      Rational ratio = rat_abs(vals[a] - vals[b]) / space->dist(pts[a], pts[b]);
      if (ratio > lip) lip = ratio;
    }
  std::vector<Rational> out(static_cast<std::size_t>(space->size()));
  for (int x = 0; x < space->size(); ++x) {
    Rational best = vals[0] + lip * space->dist(x, pts[0]);
    for (std::size_t a = 1; a < pts.size(); ++a) {
      Rational cand = vals[a] + lip * space->dist(x, pts[a]);
      if (cand < best) best = cand;
    }
    out[static_cast<std::size_t>(x)] = best;
  }
  return LipFn::make(std::move(space), std::move(out));
}

LipFn sup_combine(const std::vector<LipFn>& fs) {
  if (fs.empty()) fail(Err::BadArgument, "sup of an empty family");
  SpacePtr space = fs[0].space();
  std::vector<Rational> v(fs[0].values());
  for (std::size_t k = 1; k < fs.size(); ++k) {
    require_same_space(space, fs[k].space());
    for (std::size_t i = 0; i < v.size(); ++i)
      if (fs[k].value(static_cast<int>(i)) > v[i]) v[i] = fs[k].value(static_cast<int>(i));
  }
  return LipFn::raw(std::move(space), std::move(v));
}

FreeElement::FreeElement(SpacePtr space) : space_(std::move(space)) {}

FreeElement FreeElement::from_coeffs(SpacePtr space, std::map<int, Rational> coeffs) {
  FreeElement e(std::move(space));
  for (auto& [p, c] : coeffs) {
    if (p < 0 || p >= e.space_->size())
      fail(Err::IndexOutOfRange, "support point outside the space");
    if (p == kBase || c == 0) continue;  // delta at the base is the zero element
    e.coeffs_.emplace(p, c);
  }
  return e;
}

Rational FreeElement::coeff(int i) const {
  auto it = coeffs_.find(i);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

FreeElement FreeElement::operator+(const FreeElement& other) const {
  require_same_space(space_, other.space_);
  std::map<int, Rational> out = coeffs_;
  for (const auto& [p, c] : other.coeffs_) out[p] += c;
  return from_coeffs(space_, std::move(out));
}

FreeElement FreeElement::operator-(const FreeElement& other) const {
  require_same_space(space_, other.space_);
  std::map<int, Rational> out = coeffs_;
  for (const auto& [p, c] : other.coeffs_) out[p] -= c;
  return from_coeffs(space_, std::move(out));
}

FreeElement FreeElement::scaled(const Rational& c) const {
  std::map<int, Rational> out;
  if (c != 0)
    for (const auto& [p, v] : coeffs_) out.emplace(p, v * c);
  return from_coeffs(space_, std::move(out));
}

FreeElement delta(SpacePtr space, int x) {
  if (x < 0 || x >= space->size()) fail(Err::IndexOutOfRange, "point outside the space");
  std::map<int, Rational> m;
  m.emplace(x, Rational(1));
  return FreeElement::from_coeffs(std::move(space), std::move(m));
}

FreeElement molecule(SpacePtr space, int x, int y) {
  if (x == y) fail(Err::SamePoint, "a molecule needs two distinct points");
  Rational inv = Rational(1) / space->dist(x, y);
  std::map<int, Rational> m;
  m.emplace(x, inv);
  m[y] -= inv;
  return FreeElement::from_coeffs(std::move(space), std::move(m));
}

Rational pairing(const LipFn& f, const FreeElement& mu) {
  require_same_space(f.space(), mu.space());
  Rational out(0);
  for (const auto& [p, c] : mu.coeffs()) out += c * f.value(p);
  return out;
}

}  // namespace ultralip
