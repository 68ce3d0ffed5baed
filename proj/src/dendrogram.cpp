#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "ultralip/space.hpp"

namespace ultralip {

Dendrogram Dendrogram::build(std::vector<Node> nodes, int root) {
  Dendrogram d;
  const int n = static_cast<int>(nodes.size());
  if (root < 0 || root >= n) fail(Err::BadArgument, "dendrogram root out of range");
  std::vector<int> seen(n, 0);
  int leaves = 0;
  std::function<void(int, const Rational*)> walk = [&](int v, const Rational* parent_h) {
    if (v < 0 || v >= n) fail(Err::BadArgument, "dendrogram child out of range");
    if (seen[v]++) fail(Err::BadArgument, "dendrogram is not a tree");
    const Node& nd = nodes[v];
    if (nd.leaf()) {
      if (nd.label.empty()) fail(Err::BadArgument, "leaf without label");
      ++leaves;
      return;
    }
    if (nd.children.size() < 2)
      fail(Err::BadArgument, "internal node with fewer than two children");
    if (nd.height <= 0) fail(Err::BadArgument, "internal height must be positive");
    if (parent_h && !(nd.height < *parent_h))
      fail(Err::BadArgument, "heights must strictly decrease from the root");
    for (int c : nd.children) walk(c, &nd.height);
  };
  walk(root, nullptr);
  int reached = 0;
  for (int v = 0; v < n; ++v) reached += seen[v];
  if (reached != n) fail(Err::BadArgument, "dendrogram has unreachable nodes");
  d.nodes_ = std::move(nodes);
  d.root_ = root;
  d.leaf_count_ = leaves;
  return d;
}

std::vector<std::string> Dendrogram::leaf_labels() const {
  std::vector<std::string> out;
  std::function<void(int)> walk = [&](int v) {
    const Node& nd = nodes_[v];
    if (nd.leaf()) {
      out.push_back(nd.label);
      return;
    }
    for (int c : nd.children) walk(c);
  };
  walk(root_);
  return out;
}

namespace {

// Single linkage at exact thresholds. On ultrametric input the relation
// d <= h is an equivalence and cross-cluster distances are constant, so
// representatives suffice.
Dendrogram merge_tree(const std::vector<std::string>& labels,
                      const std::vector<std::vector<Rational>>& dist) {
  const int n = static_cast<int>(labels.size());
  std::vector<Dendrogram::Node> nodes;
  nodes.reserve(static_cast<std::size_t>(2 * n));
  struct Cluster {
    int node;
    int rep;
    int min_member;
  };
  std::vector<Cluster> clusters;
  for (int i = 0; i < n; ++i) {
    nodes.push_back({Rational(0), {}, labels[static_cast<std::size_t>(i)]});
    clusters.push_back({i, i, i});
  }
  std::set<Rational> values;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) values.insert(dist[i][j]);
  for (const Rational& h : values) {
    std::vector<Cluster> next;
    std::vector<bool> used(clusters.size(), false);
    for (std::size_t i = 0; i < clusters.size(); ++i) {
      if (used[i]) continue;
      std::vector<std::size_t> group{i};
      used[i] = true;
      for (std::size_t j = i + 1; j < clusters.size(); ++j) {
        if (used[j]) continue;
        if (dist[clusters[i].rep][clusters[j].rep] <= h) {
          group.push_back(j);
          used[j] = true;
        }
      }
      if (group.size() == 1) {
        next.push_back(clusters[i]);
        continue;
      }
      std::sort(group.begin(), group.end(), [&](std::size_t a, std::size_t b) {
        return clusters[a].min_member < clusters[b].min_member;
      });
      Dendrogram::Node merged;
      merged.height = h;
      for (std::size_t g : group) merged.children.push_back(clusters[g].node);
      nodes.push_back(std::move(merged));
      next.push_back({static_cast<int>(nodes.size()) - 1, clusters[group[0]].rep,
                      clusters[group[0]].min_member});
    }
    clusters = std::move(next);
    if (clusters.size() == 1) break;
  }
  if (clusters.size() != 1) fail(Err::BadArgument, "merge did not reach a single cluster");
  return Dendrogram::build(std::move(nodes), clusters[0].node);
}

}  // namespace

Dendrogram to_dendrogram(const FiniteSpace& space) {
  if (!space.is_ultrametric())
    fail(Err::NotUltrametric, "only ultrametric spaces have a dendrogram");
  return merge_tree(space.labels(), space.matrix());
}

Dendrogram to_dendrogram(const std::vector<std::string>& labels,
                         const std::vector<std::vector<Rational>>& dist) {
  Dendrogram d = merge_tree(labels, dist);
  // lca metric must reproduce the input exactly
  FiniteSpace back = from_dendrogram(d);
  const int n = static_cast<int>(labels.size());
  std::vector<int> where(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    where[static_cast<std::size_t>(i)] = back.index_of(labels[static_cast<std::size_t>(i)]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (back.dist(where[static_cast<std::size_t>(i)], where[static_cast<std::size_t>(j)]) !=
          dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        fail(Err::NotUltrametric, "matrix is not an ultrametric");
  return d;
}

FiniteSpace from_dendrogram(const Dendrogram& dend) {
  std::vector<std::string> labels;
  const int n = dend.leaf_count();
  std::vector<std::vector<Rational>> dist(static_cast<std::size_t>(n),
                                          std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
  // Pairs across child subtrees realize the node's height.
  std::function<std::vector<int>(int)> walk = [&](int v) -> std::vector<int> {
    const auto& nd = dend.node(v);
    if (nd.leaf()) {
      labels.push_back(nd.label);
      return {static_cast<int>(labels.size()) - 1};
    }
    std::vector<int> mine;
    for (int c : nd.children) {
      std::vector<int> sub = walk(c);
      for (int a : mine)
        for (int b : sub)
          dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
              dist[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = nd.height;
      mine.insert(mine.end(), sub.begin(), sub.end());
    }
    return mine;
  };
  walk(dend.root());
  return FiniteSpace::validate(std::move(labels), std::move(dist));
}

}  // namespace ultralip
