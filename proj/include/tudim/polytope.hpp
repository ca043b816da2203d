#pragma once

#include <optional>
#include <vector>

#include "tudim/errors.hpp"
#include "tudim/matrix.hpp"

namespace tudim {

inline constexpr long long kDefaultBudget = 10'000'000;

// a x <= b together with optional per-variable integer bounds.
struct HPolyhedron {
  IntMatrix a;
  IntVector b;
  std::vector<std::optional<Int>> lb, ub;

  int num_vars() const { return a.cols(); }
  void validate() const;
  bool all_bounds_finite() const;
  bool contains(const RatVector& x) const;
};

// Pairwise-distinct points, kept sorted lexicographically.
struct VertexSet {
  std::vector<RatVector> points;

  bool operator==(const VertexSet& o) const { return points == o.points; }
};

// Exactly the vertices of a bounded polyhedron, by enumeration of row bases.
// Throws UnboundedError (with a direction) on unbounded input and BudgetError
// when the basis count exceeds the budget.
VertexSet vertices(const HPolyhedron& p, long long budget = kDefaultBudget);

// Same enumeration with equality rows e x = f forced into every basis; used
// for slice polytopes. For inequality systems the deduplicated basic feasible
// points are exactly the vertex set.
VertexSet vertices_with_eqs(const HPolyhedron& p, const RatMatrix& e, const RatVector& f,
                            long long budget = kDefaultBudget);

// All lattice points, in lexicographic order, via a box scan over the
// (derived or given) bounds plus an exact constraint filter.
std::vector<IntVector> integer_points(const HPolyhedron& p, long long budget = kDefaultBudget);

// Vertices of conv(P ∩ Z^n): integer points filtered by the is-extreme test.
VertexSet integer_hull_vertices(const HPolyhedron& p, long long budget = kDefaultBudget);

// Exact test for p ∈ conv(v), by LP feasibility of a convex combination.
bool contains_in_hull(const VertexSet& v, const RatVector& p);

// Extreme points of an arbitrary finite point set, sorted lexicographically.
VertexSet hull_of_points(const std::vector<RatVector>& pts);

struct IdpResult {
  bool holds;
  std::optional<IntVector> witness;  // lexicographically first undecomposable point of kP
};

// Integer decomposition property check for an integral bounded polyhedron.
IdpResult idp_check(const HPolyhedron& p, int k, long long budget = kDefaultBudget);

}  // namespace tudim
