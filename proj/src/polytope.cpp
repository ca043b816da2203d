#include "tudim/polytope.hpp"

#include <algorithm>
#include <stdexcept>

#include "tudim/linalg.hpp"
#include "tudim/lp.hpp"

namespace tudim {

void HPolyhedron::validate() const {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("polyhedron: b size mismatch");
  if (static_cast<int>(lb.size()) != a.cols() || static_cast<int>(ub.size()) != a.cols())
    throw std::invalid_argument("polyhedron: bounds size mismatch");
  for (int j = 0; j < a.cols(); ++j)
    if (lb[j] && ub[j] && *lb[j] > *ub[j]) throw std::invalid_argument("polyhedron: lb > ub");
}

bool HPolyhedron::all_bounds_finite() const {
  for (int j = 0; j < a.cols(); ++j)
    if (!lb[j] || !ub[j]) return false;
  return true;
}

bool HPolyhedron::contains(const RatVector& x) const {
  if (static_cast<int>(x.size()) != a.cols()) throw std::invalid_argument("contains: dimension mismatch");
  for (int i = 0; i < a.rows(); ++i) {
    Rat s(0);
    for (int j = 0; j < a.cols(); ++j) s += Rat(a(i, j)) * x[j];
    if (s > Rat(b[i])) return false;
  }
  for (int j = 0; j < a.cols(); ++j) {
    if (lb[j] && x[j] < Rat(*lb[j])) return false;
    if (ub[j] && x[j] > Rat(*ub[j])) return false;
  }
  return true;
}

namespace {

LinearProgram lp_from_polyhedron(const HPolyhedron& p) {
  LinearProgram lp(p.num_vars());
  for (int i = 0; i < p.a.rows(); ++i) {
    RatVector row(p.num_vars());
    for (int j = 0; j < p.num_vars(); ++j) row[j] = Rat(p.a(i, j));
    lp.add_ineq(std::move(row), Rat(p.b[i]));
  }
  for (int j = 0; j < p.num_vars(); ++j) {
    if (p.lb[j]) lp.lb[j] = Rat(*p.lb[j]);
    if (p.ub[j]) lp.ub[j] = Rat(*p.ub[j]);
  }
  return lp;
}

// Throws UnboundedError unless every coordinate is bounded in both directions.
// Returns false when the system is infeasible (trivially bounded).
bool check_bounded(const HPolyhedron& p, const RatMatrix& eqs, const RatVector& eq_rhs) {
  LinearProgram lp = lp_from_polyhedron(p);
  for (int i = 0; i < eqs.rows(); ++i) {
    RatVector row(p.num_vars());
    for (int j = 0; j < p.num_vars(); ++j) row[j] = eqs(i, j);
    lp.add_eq(std::move(row), eq_rhs[i]);
  }
  if (p.all_bounds_finite()) return true;
  for (int j = 0; j < p.num_vars(); ++j) {
    for (int sgn : {+1, -1}) {
      if (sgn > 0 && p.ub[j]) continue;
      if (sgn < 0 && p.lb[j]) continue;
      lp.objective.assign(p.num_vars(), Rat(0));
      lp.objective[j] = sgn;
      LpOutcome o = solve_lp(lp);
      if (o.status == LpOutcome::Status::infeasible) return false;
      if (o.status == LpOutcome::Status::unbounded) throw UnboundedError(o.ray);
    }
  }
  return true;
}

struct Row {
  RatVector coeffs;
  Rat rhs;
};

// All constraint rows of p, bounds included, in a fixed deterministic order.
std::vector<Row> all_rows(const HPolyhedron& p) {
  std::vector<Row> rows;
  for (int i = 0; i < p.a.rows(); ++i) {
    RatVector c(p.num_vars());
    for (int j = 0; j < p.num_vars(); ++j) c[j] = Rat(p.a(i, j));
    rows.push_back({std::move(c), Rat(p.b[i])});
  }
  for (int j = 0; j < p.num_vars(); ++j) {
    if (p.ub[j]) {
      RatVector c(p.num_vars(), Rat(0));
      c[j] = 1;
      rows.push_back({std::move(c), Rat(*p.ub[j])});
    }
    if (p.lb[j]) {
      RatVector c(p.num_vars(), Rat(0));
      c[j] = -1;
      rows.push_back({std::move(c), Rat(-*p.lb[j])});
    }
  }
  return rows;
}

void sort_dedup(std::vector<RatVector>& pts) {
  std::sort(pts.begin(), pts.end(), [](const RatVector& x, const RatVector& y) { return lex_less(x, y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace

VertexSet vertices_with_eqs(const HPolyhedron& p, const RatMatrix& eqs, const RatVector& eq_rhs,
                            long long budget) {
  p.validate();
  if (!check_bounded(p, eqs, eq_rhs)) return {};

  const int n = p.num_vars();
  std::vector<Row> rows = all_rows(p);

  // Equalities are tight at every point, so force a row basis of them into
  // every candidate and complete with inequality rows.
  std::vector<int> eq_basis = eqs.rows() > 0 ? leftmost_independent_rows(eqs) : std::vector<int>{};
  const int r = static_cast<int>(eq_basis.size());
  const int need = n - r;
  if (need < 0) return {};

  std::vector<RatVector> found;
  long long used = 0;

  std::vector<int> combo(need);
  for (int i = 0; i < need; ++i) combo[i] = i;
  const int m = static_cast<int>(rows.size());
  if (need > m) return {};

  auto try_basis = [&](const std::vector<int>& ineq_idx) {
    if (++used > budget) throw BudgetError("vertex enumeration: basis budget exceeded");
    RatMatrix aug(n, n + 1);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < n; ++j) aug(i, j) = eqs(eq_basis[i], j);
      aug(i, n) = eq_rhs[eq_basis[i]];
    }
    for (int i = 0; i < need; ++i) {
      for (int j = 0; j < n; ++j) aug(r + i, j) = rows[ineq_idx[i]].coeffs[j];
      aug(r + i, n) = rows[ineq_idx[i]].rhs;
    }
    std::vector<int> pivots = rref_in_place(aug);
    // Keep only nonsingular systems: n pivots, all in coefficient columns.
    if (static_cast<int>(pivots.size()) != n || pivots.back() == n) return;
    RatVector x(n);
    for (int i = 0; i < n; ++i) x[pivots[i]] = aug(i, n);
    // Feasibility against everything, equalities included.
    for (const auto& row : rows) {
      Rat s(0);
      for (int j = 0; j < n; ++j) s += row.coeffs[j] * x[j];
      if (s > row.rhs) return;
    }
    for (int i = 0; i < eqs.rows(); ++i) {
      Rat s(0);
      for (int j = 0; j < n; ++j) s += eqs(i, j) * x[j];
      if (s != eq_rhs[i]) return;
    }
    found.push_back(std::move(x));
  };

  if (need == 0) {
    try_basis({});
  } else {
    for (;;) {
      try_basis(combo);
      int i = need - 1;
      while (i >= 0 && combo[i] == m - need + i) --i;
      if (i < 0) break;
      ++combo[i];
      for (int j = i + 1; j < need; ++j) combo[j] = combo[j - 1] + 1;
    }
  }

  sort_dedup(found);
  return VertexSet{std::move(found)};
}

bool contains_in_hull(const VertexSet& v, const RatVector& p) {
  if (v.points.empty()) return false;
  const int n = static_cast<int>(p.size());
  for (const auto& q : v.points)
    if (static_cast<int>(q.size()) != n) throw std::invalid_argument("contains_in_hull: dimension mismatch");
  const int k = static_cast<int>(v.points.size());
  LinearProgram lp(k);
  for (int i = 0; i < k; ++i) lp.lb[i] = Rat(0);
  RatVector ones(k, Rat(1));
  lp.add_eq(ones, Rat(1));
  for (int c = 0; c < n; ++c) {
    RatVector row(k);
    for (int i = 0; i < k; ++i) row[i] = v.points[i][c];
    lp.add_eq(std::move(row), p[c]);
  }
  return feasible_point(lp).has_value();
}

namespace {

// Keeps the points that are not convex combinations of the other points.
std::vector<RatVector> extreme_filter(const std::vector<RatVector>& pts) {
  std::vector<RatVector> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    VertexSet others;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.points.push_back(pts[j]);
    if (!contains_in_hull(others, pts[i])) out.push_back(pts[i]);
  }
  return out;
}

}  // namespace

VertexSet vertices(const HPolyhedron& p, long long budget) {
  VertexSet basic = vertices_with_eqs(p, RatMatrix(0, p.num_vars()), {}, budget);
  std::vector<RatVector> filtered = extreme_filter(basic.points);
  // Deduplicated basic feasible points of an inequality system are already
  // exactly the vertices; anything the filter removes indicates a bug.
  internal_check(filtered.size() == basic.points.size(), "vertices: basic point was not extreme");
  return VertexSet{std::move(filtered)};
}

std::vector<IntVector> integer_points(const HPolyhedron& p, long long budget) {
  p.validate();
  const int n = p.num_vars();
  IntVector lo(n), hi(n);
  LinearProgram lp = lp_from_polyhedron(p);
  for (int j = 0; j < n; ++j) {
    if (p.lb[j] && p.ub[j]) {
      lo[j] = *p.lb[j];
      hi[j] = *p.ub[j];
      continue;
    }
    for (int sgn : {+1, -1}) {
      lp.objective.assign(n, Rat(0));
      lp.objective[j] = sgn;
      LpOutcome o = solve_lp(lp);
      if (o.status == LpOutcome::Status::infeasible) return {};
      if (o.status == LpOutcome::Status::unbounded) throw UnboundedError(o.ray);
      if (sgn > 0)
        hi[j] = rat_floor(o.value);
      else
        lo[j] = -rat_floor(o.value);
    }
  }

  Int volume(1);
  for (int j = 0; j < n; ++j) {
    if (hi[j] < lo[j]) return {};
    volume *= hi[j] - lo[j] + 1;
    if (volume > budget) throw BudgetError("integer_points: box volume exceeds budget");
  }

  std::vector<IntVector> out;
  IntVector x = lo;
  if (n == 0) return {};
  for (;;) {
    RatVector xr(n);
    for (int j = 0; j < n; ++j) xr[j] = Rat(x[j]);
    if (p.contains(xr)) out.push_back(x);
    int j = n - 1;
    while (j >= 0 && x[j] == hi[j]) {
      x[j] = lo[j];
      --j;
    }
    if (j < 0) break;
    ++x[j];
  }
  return out;
}

VertexSet hull_of_points(const std::vector<RatVector>& pts) {
  std::vector<RatVector> work = pts;
  sort_dedup(work);
  std::vector<RatVector> extreme = extreme_filter(work);
  return VertexSet{std::move(extreme)};
}

VertexSet integer_hull_vertices(const HPolyhedron& p, long long budget) {
  std::vector<IntVector> pts = integer_points(p, budget);
  std::vector<RatVector> rats;
  rats.reserve(pts.size());
  for (const auto& z : pts) rats.push_back(to_rat(z));
  std::vector<RatVector> extreme = extreme_filter(rats);
  sort_dedup(extreme);
  return VertexSet{std::move(extreme)};
}

namespace {

bool decompose_dfs(const IntVector& remaining, int parts, std::size_t min_idx,
                   const std::vector<IntVector>& s, const IntVector& s_min, const IntVector& s_max,
                   long long& nodes, long long budget) {
  if (++nodes > budget) throw BudgetError("idp_check: decomposition search budget exceeded");
  const int n = static_cast<int>(remaining.size());
  if (parts == 0) {
    for (int c = 0; c < n; ++c)
      if (remaining[c] != 0) return false;
    return true;
  }
  for (int c = 0; c < n; ++c) {
    if (remaining[c] < parts * s_min[c] || remaining[c] > parts * s_max[c]) return false;
  }
  for (std::size_t i = min_idx; i < s.size(); ++i) {
    IntVector next(n);
    for (int c = 0; c < n; ++c) next[c] = remaining[c] - s[i][c];
    if (decompose_dfs(next, parts - 1, i, s, s_min, s_max, nodes, budget)) return true;
  }
  return false;
}

}  // namespace

IdpResult idp_check(const HPolyhedron& p, int k, long long budget) {
  if (k < 1) throw std::invalid_argument("idp_check: k must be positive");
  p.validate();
  VertexSet vs = vertices(p, budget);
  VertexSet hull = integer_hull_vertices(p, budget);
  if (!(vs == hull)) throw std::invalid_argument("idp_check: polyhedron is not integral");

  std::vector<IntVector> s = integer_points(p, budget);
  const int n = p.num_vars();

  HPolyhedron kp = p;
  for (auto& v : kp.b) v *= k;
  for (auto& v : kp.lb)
    if (v) *v *= k;
  for (auto& v : kp.ub)
    if (v) *v *= k;

  std::vector<IntVector> targets = integer_points(kp, budget);

  if (s.empty()) {
    // Empty P: kP has no integer points either (it is empty), so IDP holds.
    return {targets.empty(), targets.empty() ? std::nullopt : std::make_optional(targets.front())};
  }

  IntVector s_min = s.front(), s_max = s.front();
  for (const auto& x : s)
    for (int c = 0; c < n; ++c) {
      if (x[c] < s_min[c]) s_min[c] = x[c];
      if (x[c] > s_max[c]) s_max[c] = x[c];
    }

  long long nodes = 0;
  for (const auto& z : targets) {
    if (!decompose_dfs(z, k, 0, s, s_min, s_max, nodes, budget)) return {false, z};
  }
  return {true, std::nullopt};
}

}  // namespace tudim
