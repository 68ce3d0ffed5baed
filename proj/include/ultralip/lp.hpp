#pragma once

#include <vector>

#include "ultralip/rational.hpp"

namespace ultralip::lp {

enum class Status { Optimal, Infeasible, Unbounded };

// maximize objective . v  subject to  row.coeffs . v <= row.rhs,
// variables unrestricted in sign.
struct Problem {
  int num_vars = 0;
  std::vector<Rational> objective;
  struct Row {
    std::vector<Rational> coeffs;
    Rational rhs;
  };
  std::vector<Row> rows;
  void add_row(std::vector<Rational> coeffs, Rational rhs);
};

struct Solution {
  Status status = Status::Infeasible;
  Rational value;
  std::vector<Rational> point;
};

// Exact rational two-phase simplex with Bland's rule; deterministic.
Solution maximize(const Problem& p);

// All-pairs shortest paths for symmetric nonnegative weights; the exact
// optimum of the difference-constraint system |g_u - g_v| <= w(u,v).
std::vector<std::vector<Rational>> all_pairs_shortest(
    const std::vector<std::vector<Rational>>& weights);

}  // namespace ultralip::lp
