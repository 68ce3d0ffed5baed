#pragma once

#include <array>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ultralip/errors.hpp"
#include "ultralip/rational.hpp"

namespace ultralip {

// The base point of every pointed space sits at index 0.
constexpr int kBase = 0;

// A validated pointed finite metric space with exact rational distances.
// Construction goes through validate(); instances are immutable afterwards.
class FiniteSpace {
 public:
  // Checks the metric axioms; throws AsymmetricMatrix, NegativeDistance,
  // ZeroOffDiagonal or TriangleViolation. The ultrametric flag is set by an
  // exhaustive triple check; the first violating triple is kept as witness.
  static FiniteSpace validate(std::vector<std::string> labels,
                              std::vector<std::vector<Rational>> dist);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;  // throws BadArgument
  const Rational& dist(int i, int j) const { return dist_[i][j]; }
  const std::vector<std::vector<Rational>>& matrix() const { return dist_; }

  bool is_ultrametric() const { return is_ultrametric_; }
  // A triple (i,j,k) with d(i,j) > max{d(i,k), d(k,j)}, when one exists.
  const std::optional<std::array<int, 3>>& ultrametric_witness() const {
    return ultra_witness_;
  }

  Rational max_dist_to_base() const;
  Rational min_positive_dist() const;  // SinglePoint when size() == 1
  // Sorted distinct positive distances.
  std::vector<Rational> realized_distances() const;

  std::vector<int> open_ball(int center, const Rational& radius) const;
  std::vector<int> closed_ball(int center, const Rational& radius) const;

 private:
  FiniteSpace() = default;
  std::vector<std::string> labels_;
  std::vector<std::vector<Rational>> dist_;
  bool is_ultrametric_ = false;
  std::optional<std::array<int, 3>> ultra_witness_;
};

using SpacePtr = std::shared_ptr<const FiniteSpace>;

SpacePtr make_space(std::vector<std::string> labels,
                    std::vector<std::vector<Rational>> dist);

struct BallSpec {
  int center = 0;
  Rational radius;
  bool closed = false;
};

// One item of the ultrametric ball lemma, evaluated on a concrete tuple.
struct BallFactsItem {
  bool applicable = false;
  bool holds = true;
  std::string note;
};

struct BallFactsReport {
  // (1) distinct side distances force the max;
  // (2) inside/outside pairs are at least the radius apart;
  // (3) any interior point recenters the ball;
  // (4) the open ball equals a closed ball at the largest realized
  //     distance below the radius.
  std::array<BallFactsItem, 4> item;
  bool all_hold() const;
};

// Evaluates the four ball facts on (x, y, z, r). Throws NotUltrametric.
BallFactsReport ultrametric_ball_facts(const FiniteSpace& space, int x, int y,
                                       int z, const Rational& r);

// Rooted height-labelled tree whose leaf lca-heights realize an ultrametric.
// Leaves carry labels; internal nodes have >= 2 children and strictly larger
// heights than every descendant. The base leaf is the first leaf in depth
// first order.
class Dendrogram {
 public:
  struct Node {
    Rational height;            // 0 for leaves
    std::vector<int> children;  // empty for leaves
    std::string label;          // leaves only
    bool leaf() const { return children.empty(); }
  };

  static Dendrogram build(std::vector<Node> nodes, int root);

  int root() const { return root_; }
  const Node& node(int i) const { return nodes_[i]; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int leaf_count() const { return leaf_count_; }
  std::vector<std::string> leaf_labels() const;  // depth-first order

 private:
  Dendrogram() = default;
  std::vector<Node> nodes_;
  int root_ = 0;
  int leaf_count_ = 0;
};

// Exact single-linkage merge tree; requires space.is_ultrametric().
Dendrogram to_dendrogram(const FiniteSpace& space);
// Merge tree straight from a matrix. Instead of the cubic triple check it
// verifies the lca metric reproduces the input exactly, which characterizes
// finite ultrametrics; throws NotUltrametric otherwise.
Dendrogram to_dendrogram(const std::vector<std::string>& labels,
                         const std::vector<std::vector<Rational>>& dist);
// Leaf metric d(x,y) = height of the lowest common ancestor.
FiniteSpace from_dendrogram(const Dendrogram& dend);

// Line-oriented space file: "space <n>", labels, then n rows of rationals.
FiniteSpace read_space(std::istream& in);
void write_space(std::ostream& out, const FiniteSpace& space);

// Dendrogram file: "dend" header, then "( h : child child ... )".
Dendrogram read_dendrogram(std::istream& in);
void write_dendrogram(std::ostream& out, const Dendrogram& dend);

// Reads either format, keyed on the header word.
SpacePtr load_space(const std::string& path);
SpacePtr parse_space_text(const std::string& text);

}  // namespace ultralip
