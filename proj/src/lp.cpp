#include "ultralip/lp.hpp"

#include <algorithm>

#include "ultralip/errors.hpp"

namespace ultralip::lp {

void Problem::add_row(std::vector<Rational> coeffs, Rational rhs) {
  if (static_cast<int>(coeffs.size()) != num_vars)
    fail(Err::BadArgument, "row width does not match variable count");
  rows.push_back({std::move(coeffs), std::move(rhs)});
}

namespace {

// Dense tableau simplex. Columns: 2*num_vars sign-split variables, one slack
// per row, artificials for rows whose rhs came in negative, rhs last.
// Bland's rule on both the entering and the leaving choice guarantees
// termination; everything is exact.
class Tableau {
 public:
  explicit Tableau(const Problem& p)
      : n_split_(2 * p.num_vars), m_(static_cast<int>(p.rows.size())) {
    art_start_ = n_split_ + m_;
    int n_art = 0;
    for (const auto& row : p.rows)
      if (row.rhs < 0) ++n_art;
    cols_ = art_start_ + n_art + 1;
    tab_.assign(static_cast<std::size_t>(m_),
                std::vector<Rational>(static_cast<std::size_t>(cols_), Rational(0)));
    basis_.assign(static_cast<std::size_t>(m_), -1);
    n_art_ = n_art;
    int art = 0;
    for (int r = 0; r < m_; ++r) {
      const auto& row = p.rows[static_cast<std::size_t>(r)];
      const bool flip = row.rhs < 0;
      const Rational sign = flip ? Rational(-1) : Rational(1);
      for (int v = 0; v < p.num_vars; ++v) {
        at(r, 2 * v) = sign * row.coeffs[static_cast<std::size_t>(v)];
        at(r, 2 * v + 1) = -sign * row.coeffs[static_cast<std::size_t>(v)];
      }
      at(r, n_split_ + r) = sign;
      rhs(r) = sign * row.rhs;
      if (flip) {
        int col = art_start_ + art++;
        at(r, col) = 1;
        basis_[static_cast<std::size_t>(r)] = col;
      } else {
        basis_[static_cast<std::size_t>(r)] = n_split_ + r;
      }
    }
  }

  bool needs_phase1() const { return n_art_ > 0; }
  int art_start() const { return art_start_; }
  int data_cols() const { return cols_ - 1; }

  // maximize obj over the current feasible basis; false when unbounded
  bool run(const std::vector<Rational>& obj, Rational& value) {
    std::vector<char> basic(static_cast<std::size_t>(cols_ - 1), 0);
    for (int b : basis_) basic[static_cast<std::size_t>(b)] = 1;
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols_ - 1 && enter < 0; ++j) {
        if (basic[static_cast<std::size_t>(j)]) continue;
        Rational rc = obj[static_cast<std::size_t>(j)];
        for (int r = 0; r < m_; ++r) {
          const Rational& a = at(r, j);
          if (a != 0) rc -= obj[static_cast<std::size_t>(basis_[static_cast<std::size_t>(r)])] * a;
        }
        if (rc > 0) enter = j;  // Bland: first improving column
      }
      if (enter < 0) break;
      int leave = -1;
      Rational best;
      for (int r = 0; r < m_; ++r) {
        const Rational& a = at(r, enter);
        if (a > 0) {
          Rational ratio = rhs(r) / a;
          if (leave < 0 || ratio < best ||
              (ratio == best &&
               basis_[static_cast<std::size_t>(r)] < basis_[static_cast<std::size_t>(leave)])) {
            leave = r;
            best = ratio;
          }
        }
      }
      if (leave < 0) return false;
      basic[static_cast<std::size_t>(basis_[static_cast<std::size_t>(leave)])] = 0;
      basic[static_cast<std::size_t>(enter)] = 1;
      pivot(leave, enter);
    }
    value = 0;
    for (int r = 0; r < m_; ++r)
      value += obj[static_cast<std::size_t>(basis_[static_cast<std::size_t>(r)])] * rhs(r);
    return true;
  }

  // After a zero-value phase 1: pivot artificials out where possible, then
  // drop redundant rows and every artificial column.
  void drop_artificials() {
    for (int r = 0; r < m_; ++r) {
      if (basis_[static_cast<std::size_t>(r)] < art_start_) continue;
      for (int j = 0; j < art_start_; ++j) {
        if (at(r, j) != 0) {
          pivot(r, j);
          break;
        }
      }
    }
    for (int r = m_ - 1; r >= 0; --r) {
      if (basis_[static_cast<std::size_t>(r)] >= art_start_) {
        if (rhs(r) != 0) fail(Err::BadArgument, "inconsistent zero-cost basis");
        tab_.erase(tab_.begin() + r);
        basis_.erase(basis_.begin() + r);
        --m_;
      }
    }
    for (auto& row : tab_) row.erase(row.begin() + art_start_, row.end() - 1);
    cols_ = art_start_ + 1;
    n_art_ = 0;
  }

  std::vector<Rational> extract(int num_vars) const {
    std::vector<Rational> v(static_cast<std::size_t>(num_vars), Rational(0));
    for (int r = 0; r < m_; ++r) {
      int b = basis_[static_cast<std::size_t>(r)];
      if (b < n_split_) {
        if (b % 2 == 0)
          v[static_cast<std::size_t>(b / 2)] += rhs_const(r);
        else
          v[static_cast<std::size_t>(b / 2)] -= rhs_const(r);
      }
    }
    return v;
  }

 private:
  Rational& at(int r, int c) { return tab_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
  Rational& rhs(int r) { return tab_[static_cast<std::size_t>(r)].back(); }
  const Rational& rhs_const(int r) const { return tab_[static_cast<std::size_t>(r)].back(); }

  void pivot(int row, int col) {
    auto& prow = tab_[static_cast<std::size_t>(row)];
    const Rational piv = prow[static_cast<std::size_t>(col)];
    for (auto& x : prow) x /= piv;
    for (int r = 0; r < m_; ++r) {
      if (r == row) continue;
      auto& trow = tab_[static_cast<std::size_t>(r)];
      const Rational factor = trow[static_cast<std::size_t>(col)];
      if (factor == 0) continue;
      for (int j = 0; j < cols_; ++j)
        if (prow[static_cast<std::size_t>(j)] != 0)
          trow[static_cast<std::size_t>(j)] -= factor * prow[static_cast<std::size_t>(j)];
    }
    basis_[static_cast<std::size_t>(row)] = col;
  }

  int n_split_;
  int m_;
  int n_art_ = 0;
  int art_start_ = 0;
  int cols_ = 0;
  std::vector<std::vector<Rational>> tab_;
  std::vector<int> basis_;
};

}  // namespace

Solution maximize(const Problem& p) {
  if (static_cast<int>(p.objective.size()) != p.num_vars)
    fail(Err::BadArgument, "objective width does not match variable count");
  Solution sol;
  if (p.rows.empty()) {
    for (const auto& c : p.objective)
      if (c != 0) {
        sol.status = Status::Unbounded;
        return sol;
      }
    sol.status = Status::Optimal;
    sol.value = 0;
    sol.point.assign(static_cast<std::size_t>(p.num_vars), Rational(0));
    return sol;
  }
  Tableau t(p);
  if (t.needs_phase1()) {
    std::vector<Rational> phase1(static_cast<std::size_t>(t.data_cols()), Rational(0));
    for (int j = t.art_start(); j < t.data_cols(); ++j)
      phase1[static_cast<std::size_t>(j)] = -1;
    Rational v;
    if (!t.run(phase1, v)) fail(Err::BadArgument, "phase 1 cannot be unbounded");
    if (v != 0) {
      sol.status = Status::Infeasible;
      return sol;
    }
    t.drop_artificials();
  }
  std::vector<Rational> obj(static_cast<std::size_t>(t.data_cols()), Rational(0));
  for (int v = 0; v < p.num_vars; ++v) {
    obj[static_cast<std::size_t>(2 * v)] = p.objective[static_cast<std::size_t>(v)];
    obj[static_cast<std::size_t>(2 * v + 1)] = -p.objective[static_cast<std::size_t>(v)];
  }
  Rational value;
  if (!t.run(obj, value)) {
    sol.status = Status::Unbounded;
    return sol;
  }
  sol.status = Status::Optimal;
  sol.value = value;
  sol.point = t.extract(p.num_vars);
  return sol;
}

std::vector<std::vector<Rational>> all_pairs_shortest(
    const std::vector<std::vector<Rational>>& weights) {
  const std::size_t n = weights.size();
  auto d = weights;
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      const Rational& dik = d[i][k];
      for (std::size_t j = i + 1; j < n; ++j) {
        if (j == k) continue;
        Rational via = dik + d[k][j];
        if (via < d[i][j]) d[i][j] = d[j][i] = via;
      }
    }
  return d;
}

}  // namespace ultralip::lp
