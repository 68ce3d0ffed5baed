#include "ultralip/freenorm.hpp"

#include <functional>

#include "ultralip/lp.hpp"

namespace ultralip {

FreeNormResult free_norm_lp(const FreeElement& mu) {
  SpacePtr space = mu.space();
  const int n = space->size();
  if (n == 1 || mu.zero()) {
    FreeNormResult out{Rational(0), {LipFn::zero(space), Rational(0)}};
    return out;
  }
  lp::Problem p;
  p.num_vars = n - 1;  // f at the non-base points
  p.objective.assign(static_cast<std::size_t>(n - 1), Rational(0));
  for (const auto& [pt, c] : mu.coeffs())
    p.objective[static_cast<std::size_t>(pt - 1)] = c;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<Rational> row(static_cast<std::size_t>(n - 1), Rational(0));
      if (i != kBase) row[static_cast<std::size_t>(i - 1)] = 1;
      row[static_cast<std::size_t>(j - 1)] = -1;
      p.add_row(row, space->dist(i, j));
      for (auto& x : row) x = -x;
      p.add_row(std::move(row), space->dist(i, j));
    }
  }
  lp::Solution sol = lp::maximize(p);
  if (sol.status != lp::Status::Optimal)
    fail(Err::BadArgument, "free-norm program must have an optimum");
  std::vector<Rational> values(static_cast<std::size_t>(n), Rational(0));
  for (int i = 1; i < n; ++i) values[static_cast<std::size_t>(i)] = sol.point[static_cast<std::size_t>(i - 1)];
  LipFn cert = LipFn::make(space, std::move(values));
  if (lip_norm_value(cert) > 1 || pairing(cert, mu) != sol.value)
    fail(Err::BadArgument, "certificate failed its feasibility audit");
  return {sol.value, {std::move(cert), sol.value}};
}

Rational free_norm_tree(const FreeElement& mu) {
  SpacePtr space = mu.space();
  if (!space->is_ultrametric())
    fail(Err::NotUltrametric, "the flow formula needs an ultrametric space");
  if (space->size() == 1 || mu.zero()) return Rational(0);
  const Dendrogram dend = to_dendrogram(*space);

  Rational total(0);
  for (const auto& [pt, c] : mu.coeffs()) total += c;

  // Walk the tree once: each node reports its subtree mass; the edge to its
  // parent has length (h(parent) - h(node))/2 and carries the mass of the
  // side of the edge away from the base leaf.
  Rational norm(0);
  std::function<Rational(int, const Rational&, bool&)> walk =
      [&](int v, const Rational& parent_h, bool& contains_base) -> Rational {
    const auto& nd = dend.node(v);
    Rational mass(0);
    if (nd.leaf()) {
      int idx = space->index_of(nd.label);
      contains_base = (idx == kBase);
      mass = mu.coeff(idx);
    } else {
      contains_base = false;
      for (int c : nd.children) {
        bool child_base = false;
        mass += walk(c, nd.height, child_base);
        contains_base = contains_base || child_base;
      }
    }
    const Rational len = (parent_h - nd.height) / 2;
    if (len != 0) {
      Rational across = contains_base ? Rational(total - mass) : mass;
      norm += len * rat_abs(across);
    }
    return mass;
  };
  // the root has no parent edge; seed the recursion with its own height
  const auto& root = dend.node(dend.root());
  for (int c : root.children) {
    bool child_base = false;
    walk(c, root.height, child_base);
  }
  return norm;
}

}  // namespace ultralip
