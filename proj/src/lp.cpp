#include "tudim/lp.hpp"

#include <stdexcept>

#include "tudim/errors.hpp"

namespace tudim {

void LinearProgram::validate() const {
  if (static_cast<int>(objective.size()) != num_vars) throw std::invalid_argument("lp: objective size mismatch");
  if (ineq_rows.size() != ineq_rhs.size() || eq_rows.size() != eq_rhs.size())
    throw std::invalid_argument("lp: row/rhs count mismatch");
  for (const auto& r : ineq_rows)
    if (static_cast<int>(r.size()) != num_vars) throw std::invalid_argument("lp: ineq row size mismatch");
  for (const auto& r : eq_rows)
    if (static_cast<int>(r.size()) != num_vars) throw std::invalid_argument("lp: eq row size mismatch");
  if (static_cast<int>(lb.size()) != num_vars || static_cast<int>(ub.size()) != num_vars)
    throw std::invalid_argument("lp: bounds size mismatch");
  for (int j = 0; j < num_vars; ++j)
    if (lb[j] && ub[j] && *lb[j] > *ub[j]) throw std::invalid_argument("lp: lb > ub");
}

namespace {

// Dense tableau over the standard-form system A y = b, y >= 0 where
// y = (x+, x-, slacks, artificials). Variable indices are global so that
// Bland's rule has a fixed total order.
class SimplexTableau {
 public:
  SimplexTableau(const LinearProgram& lp) : lp_(lp) {
    n_ = lp.num_vars;
    // Gather rows: user inequalities, then bound rows, then equalities.
    for (std::size_t i = 0; i < lp.ineq_rows.size(); ++i) rows_.push_back({lp.ineq_rows[i], lp.ineq_rhs[i], false});
    for (int j = 0; j < n_; ++j) {
      if (lp.ub[j]) {
        RatVector r(n_, Rat(0));
        r[j] = 1;
        rows_.push_back({std::move(r), *lp.ub[j], false});
      }
      if (lp.lb[j]) {
        RatVector r(n_, Rat(0));
        r[j] = -1;
        rows_.push_back({std::move(r), Rat(-*lp.lb[j]), false});
      }
    }
    for (std::size_t i = 0; i < lp.eq_rows.size(); ++i) rows_.push_back({lp.eq_rows[i], lp.eq_rhs[i], true});

    m_ = static_cast<int>(rows_.size());
    num_slacks_ = 0;
    for (const auto& r : rows_)
      if (!r.is_eq) ++num_slacks_;

    // Column layout: x+ [0,n), x- [n,2n), slacks, then artificials.
    slack_base_ = 2 * n_;
    art_base_ = slack_base_ + num_slacks_;

    // Count artificials: eq rows always; ineq rows only when rhs < 0 (their
    // slack would start negative).
    num_arts_ = 0;
    for (const auto& r : rows_)
      if (r.is_eq || r.rhs < 0) ++num_arts_;

    total_ = art_base_ + num_arts_;
    t_.assign(m_, RatVector(total_ + 1, Rat(0)));
    basis_.assign(m_, -1);

    int slack = 0, art = 0;
    for (int i = 0; i < m_; ++i) {
      const auto& r = rows_[i];
      bool flip = r.rhs < 0;
      for (int j = 0; j < n_; ++j) {
        Rat c = flip ? Rat(-r.coeffs[j]) : r.coeffs[j];
        t_[i][j] = c;
        t_[i][n_ + j] = -c;
      }
      if (!r.is_eq) {
        t_[i][slack_base_ + slack] = flip ? Rat(-1) : Rat(1);
      }
      t_[i][total_] = flip ? Rat(-r.rhs) : r.rhs;
      if (r.is_eq || flip) {
        t_[i][art_base_ + art] = 1;
        basis_[i] = art_base_ + art;
        ++art;
      } else {
        basis_[i] = slack_base_ + slack;
      }
      if (!r.is_eq) ++slack;
    }
  }

  // Maximize the given objective (over all columns) with Bland's rule.
  // Returns false when unbounded; ray_col_ then holds the entering column.
  bool run(const RatVector& cost) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < total_; ++j) {
        if (is_basic(j) || banned_[j]) continue;
        if (reduced_cost(cost, j) > 0) {
          enter = j;
          break;  // Bland: smallest improving index
        }
      }
      if (enter < 0) return true;
      int leave_row = -1;
      Rat best_ratio;
      for (int i = 0; i < m_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rat ratio = t_[i][total_] / t_[i][enter];
        if (leave_row < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leave_row])) {
          leave_row = i;
          best_ratio = ratio;
        }
      }
      if (leave_row < 0) {
        ray_col_ = enter;
        return false;
      }
      pivot(leave_row, enter);
    }
  }

  Rat reduced_cost(const RatVector& cost, int j) const {
    Rat z = cost[j];
    for (int i = 0; i < m_; ++i) {
      if (cost[basis_[i]] == 0 || t_[i][j] == 0) continue;
      z -= cost[basis_[i]] * t_[i][j];
    }
    return z;
  }

  void pivot(int row, int col) {
    Rat p = t_[row][col];
    for (int j = 0; j <= total_; ++j) t_[row][j] /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == row || t_[i][col] == 0) continue;
      Rat f = t_[i][col];
      for (int j = 0; j <= total_; ++j) t_[i][j] -= f * t_[row][j];
    }
    basis_[row] = col;
  }

  bool is_basic(int j) const {
    for (int i = 0; i < m_; ++i)
      if (basis_[i] == j) return true;
    return false;
  }

  // Phase 1: drive the artificials to zero. Returns false when infeasible.
  bool phase1() {
    banned_.assign(total_, false);
    if (num_arts_ > 0) {
      RatVector cost(total_ + 1, Rat(0));
      for (int j = art_base_; j < total_; ++j) cost[j] = -1;
      bool ok = run(cost);
      internal_check(ok, "phase 1 cannot be unbounded");
      Rat obj(0);
      for (int i = 0; i < m_; ++i)
        if (basis_[i] >= art_base_) obj += t_[i][total_];
      if (obj != 0) return false;
      // Pivot basic artificials (necessarily at value 0) out where possible.
      for (int i = 0; i < m_; ++i) {
        if (basis_[i] < art_base_) continue;
        int col = -1;
        for (int j = 0; j < art_base_; ++j)
          if (t_[i][j] != 0) {
            col = j;
            break;
          }
        if (col >= 0) pivot(i, col);
        // else: redundant row; the artificial stays basic at zero, harmless.
      }
    }
    for (int j = art_base_; j < total_; ++j) banned_[j] = true;
    return true;
  }

  // Phase 2 objective in standard-form variables.
  RatVector phase2_cost() const {
    RatVector cost(total_ + 1, Rat(0));
    for (int j = 0; j < n_; ++j) {
      cost[j] = lp_.objective[j];
      cost[n_ + j] = -lp_.objective[j];
    }
    return cost;
  }

  RatVector current_point() const {
    RatVector y(total_, Rat(0));
    for (int i = 0; i < m_; ++i) y[basis_[i]] = t_[i][total_];
    RatVector x(n_, Rat(0));
    for (int j = 0; j < n_; ++j) x[j] = y[j] - y[n_ + j];
    return x;
  }

  RatVector ray_direction() const {
    RatVector d(total_, Rat(0));
    d[ray_col_] = 1;
    for (int i = 0; i < m_; ++i) d[basis_[i]] = -t_[i][ray_col_];
    RatVector dx(n_, Rat(0));
    for (int j = 0; j < n_; ++j) dx[j] = d[j] - d[n_ + j];
    return dx;
  }

 private:
  struct Row {
    RatVector coeffs;
    Rat rhs;
    bool is_eq;
  };

  const LinearProgram& lp_;
  std::vector<Row> rows_;
  int n_ = 0, m_ = 0, num_slacks_ = 0, num_arts_ = 0;
  int slack_base_ = 0, art_base_ = 0, total_ = 0;
  std::vector<RatVector> t_;
  std::vector<int> basis_;
  std::vector<char> banned_;
  int ray_col_ = -1;
};

Rat dot(const RatVector& a, const RatVector& b) {
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool satisfies(const LinearProgram& lp, const RatVector& x) {
  for (std::size_t i = 0; i < lp.ineq_rows.size(); ++i)
    if (dot(lp.ineq_rows[i], x) > lp.ineq_rhs[i]) return false;
  for (std::size_t i = 0; i < lp.eq_rows.size(); ++i)
    if (dot(lp.eq_rows[i], x) != lp.eq_rhs[i]) return false;
  for (int j = 0; j < lp.num_vars; ++j) {
    if (lp.lb[j] && x[j] < *lp.lb[j]) return false;
    if (lp.ub[j] && x[j] > *lp.ub[j]) return false;
  }
  return true;
}

}  // namespace

LpOutcome solve_lp(const LinearProgram& lp) {
  lp.validate();
  LpOutcome out;
  SimplexTableau tab(lp);
  if (!tab.phase1()) {
    out.status = LpOutcome::Status::infeasible;
    return out;
  }
  RatVector cost = tab.phase2_cost();
  if (!tab.run(cost)) {
    out.status = LpOutcome::Status::unbounded;
    out.ray = tab.ray_direction();
    // Sanity: the ray must be feasible-improving.
    for (std::size_t i = 0; i < lp.ineq_rows.size(); ++i)
      internal_check(dot(lp.ineq_rows[i], out.ray) <= 0, "lp ray violates inequality");
    for (std::size_t i = 0; i < lp.eq_rows.size(); ++i)
      internal_check(dot(lp.eq_rows[i], out.ray) == 0, "lp ray violates equality");
    internal_check(dot(lp.objective, out.ray) > 0, "lp ray does not improve");
    return out;
  }
  out.status = LpOutcome::Status::optimal;
  out.point = tab.current_point();
  internal_check(satisfies(lp, out.point), "lp point infeasible");
  out.value = dot(lp.objective, out.point);
  for (std::size_t i = 0; i < lp.ineq_rows.size(); ++i)
    if (dot(lp.ineq_rows[i], out.point) == lp.ineq_rhs[i]) out.tight_set.push_back(static_cast<int>(i));
  return out;
}

std::optional<RatVector> feasible_point(const LinearProgram& lp) {
  lp.validate();
  SimplexTableau tab(lp);
  if (!tab.phase1()) return std::nullopt;
  RatVector x = tab.current_point();
  internal_check(satisfies(lp, x), "phase-1 point infeasible");
  return x;
}

}  // namespace tudim
