#pragma once

#include <optional>
#include <vector>

#include "tudim/matrix.hpp"

namespace tudim {

// Exact rational linear program: maximize objective subject to
// ineq rows (a x <= b), eq rows (e x = f) and optional variable bounds.
struct LinearProgram {
  int num_vars = 0;
  RatVector objective;
  std::vector<RatVector> ineq_rows;
  RatVector ineq_rhs;
  std::vector<RatVector> eq_rows;
  RatVector eq_rhs;
  std::vector<std::optional<Rat>> lb, ub;

  explicit LinearProgram(int n = 0)
      : num_vars(n), objective(n, Rat(0)), lb(n, std::nullopt), ub(n, std::nullopt) {}

  void add_ineq(RatVector coeffs, Rat rhs) {
    ineq_rows.push_back(std::move(coeffs));
    ineq_rhs.push_back(std::move(rhs));
  }
  void add_eq(RatVector coeffs, Rat rhs) {
    eq_rows.push_back(std::move(coeffs));
    eq_rhs.push_back(std::move(rhs));
  }
  void validate() const;
};

struct LpOutcome {
  enum class Status { optimal, infeasible, unbounded };
  Status status;
  RatVector point;            // when optimal
  Rat value;                  // objective at point
  std::vector<int> tight_set; // ineq row indices holding with equality at point
  RatVector ray;              // improving feasible direction when unbounded
};

// Two-phase primal simplex, Bland's rule, exact arithmetic throughout.
// Deterministic: identical inputs give identical outcomes.
LpOutcome solve_lp(const LinearProgram& lp);

// Phase-1 only: some feasible point, or absent when infeasible.
std::optional<RatVector> feasible_point(const LinearProgram& lp);

}  // namespace tudim
