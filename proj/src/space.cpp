#include "ultralip/space.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ultralip {

namespace {

void check_label(const std::string& label) {
  if (label.empty()) fail(Err::BadArgument, "empty point label");
  for (char c : label) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' ||
        c == ':')
      fail(Err::BadArgument, "label '" + label + "' contains reserved characters");
  }
}

}  // namespace

FiniteSpace FiniteSpace::validate(std::vector<std::string> labels,
                                  std::vector<std::vector<Rational>> dist) {
  const int n = static_cast<int>(labels.size());
  if (n < 1) fail(Err::BadArgument, "a pointed space needs at least one point");
  if (static_cast<int>(dist.size()) != n)
    fail(Err::BadArgument, "matrix size does not match label count");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    check_label(l);
    if (!seen.insert(l).second) fail(Err::BadArgument, "duplicate label '" + l + "'");
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(dist[i].size()) != n)
      fail(Err::BadArgument, "matrix is not square");
    if (dist[i][i] != 0)
      fail(Err::BadArgument, "nonzero diagonal at " + labels[i]);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (dist[i][j] != dist[j][i])
        fail(Err::AsymmetricMatrix,
             "d(" + labels[i] + "," + labels[j] + ") != d(" + labels[j] + "," +
                 labels[i] + ")");
      if (dist[i][j] < 0)
        fail(Err::NegativeDistance,
             "d(" + labels[i] + "," + labels[j] + ") < 0");
      if (dist[i][j] == 0)
        fail(Err::ZeroOffDiagonal,
             "d(" + labels[i] + "," + labels[j] + ") = 0 off the diagonal");
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        Rational sum = dist[i][k] + dist[k][j];
        if (dist[i][j] > sum)
          fail(Err::TriangleViolation,
               "triple (" + labels[i] + "," + labels[j] + "," + labels[k] + ")");
      }
    }
  }
  FiniteSpace s;
  s.labels_ = std::move(labels);
  s.dist_ = std::move(dist);
  s.is_ultrametric_ = true;
  for (int i = 0; i < n && s.is_ultrametric_; ++i) {
    for (int j = i + 1; j < n && s.is_ultrametric_; ++j) {
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const Rational& a = s.dist_[i][k];
        const Rational& b = s.dist_[k][j];
        const Rational& m = (a > b) ? a : b;
        if (s.dist_[i][j] > m) {
          s.is_ultrametric_ = false;
          s.ultra_witness_ = std::array<int, 3>{i, j, k};
          break;
        }
      }
    }
  }
  return s;
}

int FiniteSpace::index_of(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  fail(Err::BadArgument, "unknown label '" + label + "'");
}

Rational FiniteSpace::max_dist_to_base() const {
  Rational m = 0;
  for (int i = 1; i < size(); ++i)
    if (dist_[kBase][i] > m) m = dist_[kBase][i];
  return m;
}

Rational FiniteSpace::min_positive_dist() const {
  if (size() < 2) fail(Err::SinglePoint, "no positive distances");
  Rational m = dist_[0][1];
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (dist_[i][j] < m) m = dist_[i][j];
  return m;
}

std::vector<Rational> FiniteSpace::realized_distances() const {
  std::set<Rational> vals;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j) vals.insert(dist_[i][j]);
  return {vals.begin(), vals.end()};
}

std::vector<int> FiniteSpace::open_ball(int center, const Rational& radius) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (dist_[center][i] < radius) out.push_back(i);
  return out;
}

std::vector<int> FiniteSpace::closed_ball(int center, const Rational& radius) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (dist_[center][i] <= radius) out.push_back(i);
  return out;
}

SpacePtr make_space(std::vector<std::string> labels,
                    std::vector<std::vector<Rational>> dist) {
  return std::make_shared<const FiniteSpace>(
      FiniteSpace::validate(std::move(labels), std::move(dist)));
}

bool BallFactsReport::all_hold() const {
  for (const auto& it : item)
    if (!it.holds) return false;
  return true;
}

BallFactsReport ultrametric_ball_facts(const FiniteSpace& space, int x, int y,
                                       int z, const Rational& r) {
  if (!space.is_ultrametric()) fail(Err::NotUltrametric, "ball facts need an ultrametric space");
  if (r <= 0) fail(Err::BadArgument, "radius must be positive");
  BallFactsReport rep;

  // (1) d(x,z) != d(y,z) forces d(x,y) = max of the two.
  {
    auto& it = rep.item[0];
    const Rational& a = space.dist(x, z);
    const Rational& b = space.dist(y, z);
    if (a != b) {
      it.applicable = true;
      Rational mx = (a > b) ? a : b;
      it.holds = (space.dist(x, y) == mx);
      it.note = "d(x,y)=" + rat_str(space.dist(x, y)) + " max=" + rat_str(mx);
    } else {
      it.note = "d(x,z) = d(y,z), nothing to check";
    }
  }

  // (2) y inside B(x,r), z outside forces d(y,z) >= r.
  {
    auto& it = rep.item[1];
    if (space.dist(x, y) < r && space.dist(x, z) >= r) {
      it.applicable = true;
      it.holds = (space.dist(y, z) >= r);
      it.note = "d(y,z)=" + rat_str(space.dist(y, z)) + " r=" + rat_str(r);
    } else {
      it.note = "membership hypothesis not met";
    }
  }

  // (3) d(x,y) < r implies B(x,r) = B(y,r).
  {
    auto& it = rep.item[2];
    if (space.dist(x, y) < r) {
      it.applicable = true;
      it.holds = (space.open_ball(x, r) == space.open_ball(y, r));
      it.note = it.holds ? "balls coincide" : "balls differ";
    } else {
      it.note = "y outside B(x,r)";
    }
  }

  // (4) clopen, finitely: B(x,r) equals the closed ball at the largest
  // realized distance below r (or the singleton when none exists).
  {
    auto& it = rep.item[3];
    it.applicable = true;
    Rational below = 0;
    for (const auto& d : space.realized_distances())
      if (d < r) below = d;
    it.holds = (space.open_ball(x, r) == space.closed_ball(x, below));
    it.note = "closed radius " + rat_str(below);
  }
  return rep;
}

}  // namespace ultralip
