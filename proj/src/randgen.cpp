#include "ultralip/randgen.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace ultralip {

namespace {

// modulo draw: biased in principle, deterministic everywhere, which is what
// the byte-stability contract needs
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

}  // namespace

Dendrogram gen_space(const RandomSpaceSpec& spec) {
  if (spec.points < 1) fail(Err::BadArgument, "need at least one point");
  if (spec.branching < 2) fail(Err::BadArgument, "branching must be at least 2");
  std::vector<Rational> grid = spec.heights;
  if (grid.empty()) {
    grid.push_back(Rational(1));
    for (int k = 0; k < 8; ++k) grid.push_back(grid.back() / 2);
  }
  for (std::size_t k = 1; k < grid.size(); ++k)
    if (!(grid[k] < grid[k - 1]) || grid[k] <= 0)
      fail(Err::BadArgument, "height grid must be positive and strictly decreasing");
  std::mt19937_64 rng(spec.seed);
  std::vector<Dendrogram::Node> nodes;
  int next_label = 0;
  auto height_at = [&grid](std::size_t lvl) {
    while (lvl >= grid.size()) grid.push_back(grid.back() / 2);
    return grid[lvl];
  };
  std::function<int(int, std::size_t)> build = [&](int count, std::size_t lvl) -> int {
    if (count == 1) {
      nodes.push_back({Rational(0), {}, std::to_string(next_label++)});
      return static_cast<int>(nodes.size()) - 1;
    }
    const int max_children = std::min(spec.branching, count);
    const int c = 2 + static_cast<int>(draw(rng, static_cast<std::uint64_t>(max_children - 1)));
    // split count into c positive parts
    std::vector<int> sizes(static_cast<std::size_t>(c), 1);
    for (int rest = count - c; rest > 0; --rest)
      ++sizes[static_cast<std::size_t>(draw(rng, static_cast<std::uint64_t>(c)))];
    Dendrogram::Node parent;
    parent.height = height_at(lvl);
    std::vector<int> children;
    for (int part : sizes) children.push_back(build(part, lvl + 1));
    parent.children = std::move(children);
    nodes.push_back(std::move(parent));
    return static_cast<int>(nodes.size()) - 1;
  };
  int root = build(spec.points, 0);
  return Dendrogram::build(std::move(nodes), root);
}

SpacePtr gen_ultrametric(std::uint64_t seed, int points) {
  RandomSpaceSpec spec;
  spec.seed = seed;
  spec.points = points;
  return std::make_shared<const FiniteSpace>(from_dendrogram(gen_space(spec)));
}

LipFn gen_lipfn(SpacePtr space, std::mt19937_64& rng, bool unit_ball) {
  const int n = space->size();
  std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
  for (int i = 1; i < n; ++i) {
    long num = static_cast<long>(draw(rng, 17)) - 8;
    long den = 1L << draw(rng, 4);
    v[static_cast<std::size_t>(i)] = Rational(num, den);
    v[static_cast<std::size_t>(i)].canonicalize();
  }
  LipFn f = LipFn::make(std::move(space), std::move(v));
  if (unit_ball && f.space()->size() >= 2) {
    Rational norm = lip_norm_value(f);
    if (norm > 1) f = f.scaled(1 / norm);
  }
  return f;
}

FreeElement gen_element(SpacePtr space, std::mt19937_64& rng) {
  const int n = space->size();
  std::map<int, Rational> coeffs;
  for (int i = 1; i < n; ++i) {
    if (draw(rng, 3) == 0) continue;  // drop about a third of the support
    long num = static_cast<long>(draw(rng, 17)) - 8;
    long den = 1L << draw(rng, 4);
    Rational c(num, den);
    c.canonicalize();
    if (c != 0) coeffs.emplace(i, c);
  }
  return FreeElement::from_coeffs(std::move(space), std::move(coeffs));
}

}  // namespace ultralip
