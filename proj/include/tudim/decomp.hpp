#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tudim/matrix.hpp"
#include "tudim/polytope.hpp"

namespace tudim {

// Certificate triple for a = a_tilde + u_mat * w_mat with [a_tilde; w_mat]
// totally unimodular and w_mat in {0,+-1}.
struct AffineTuDecomposition {
  IntMatrix a_tilde;  // m x n
  IntMatrix u_mat;    // m x k
  IntMatrix w_mat;    // k x n
  int k() const { return w_mat.rows(); }
};

// Homogeneous variant: a = u_mat * w_mat with w_mat TU.
struct TuDecomposition {
  IntMatrix u_mat;
  IntMatrix w_mat;
  int k() const { return w_mat.rows(); }
};

struct Diagnosis {
  bool ok = false;
  std::string failure;  // names the first failed condition
  explicit operator bool() const { return ok; }
};

Diagnosis verify_affine(const IntMatrix& a, const AffineTuDecomposition& d);
Diagnosis verify_tu(const IntMatrix& a, const TuDecomposition& d);

// Rewrites a valid decomposition so that w has full row rank, folding the
// dependent rows into u via an integral row-combination matrix.
AffineTuDecomposition reduce_full_rank(const IntMatrix& a, const AffineTuDecomposition& d);

struct CanonicalizeResult {
  IntMatrix t;                     // k x k unimodular
  IntMatrix w;                     // t * input; contains I_k
  std::vector<int> identity_cols;  // identity_cols[j] carries unit vector e_{j+1}
};

// For full-row-rank TU w: t = inverse of the leftmost nonsingular column
// block, so that t*w contains the identity.
CanonicalizeResult canonicalize_identity(const IntMatrix& w);

// Lexicographically smallest increasing column positions carrying e_1..e_k,
// or absent when w holds no such system.
std::optional<std::vector<int>> find_identity_columns(const IntMatrix& w);

// Decision procedures for a fixed w containing the identity at the given
// columns. Absence means no decomposition with this w exists.
std::optional<AffineTuDecomposition> decide_affine_given_w(const IntMatrix& a, const IntMatrix& w,
                                                           const std::vector<int>& identity_cols);
std::optional<TuDecomposition> decide_tu_given_w(const IntMatrix& a, const IntMatrix& w,
                                                 const std::vector<int>& identity_cols);

struct LowerBounds {
  int rank_bound;     // applies to the TU-dimension only
  int heller_tu;      // min k with k^2+k+1 >= #distinct columns
  int heller_affine;  // min k with (m+k)^2+(m+k)+1 >= #distinct columns
};
LowerBounds lower_bounds(const IntMatrix& a);

struct DedupColumns {
  IntMatrix matrix;          // first occurrences, original relative order
  std::vector<int> col_map;  // original column -> column of matrix
};
DedupColumns dedup_columns(const IntMatrix& a);

enum class DimensionKind { tu, affine };

struct DimensionReport {
  DimensionKind kind = DimensionKind::affine;
  int value = 0;                  // exact, or a certified lower bound
  bool lower_bound_only = false;  // set when the candidate budget ran out
  std::optional<AffineTuDecomposition> affine_certificate;
  std::optional<TuDecomposition> tu_certificate;
  LowerBounds bounds_used{};
  long long candidates_tried = 0;
};

// Exhaustive search over identity-normalized w candidates, k ascending from
// the lower bounds, lexicographic within each k. The first hit is minimal.
DimensionReport affine_tu_dimension(const IntMatrix& a, long long budget = kDefaultBudget);
DimensionReport tu_dimension(const IntMatrix& a, long long budget = kDefaultBudget);

struct ChangeOfVariables {
  IntMatrix l;    // unimodular, w * l = [I 0]
  IntMatrix a_l;  // a * l
  IntVector c_l;  // c^T l
};

// Hermite-based substitution x = L y turning w x in Z^k into integrality of
// the first k coordinates of y.
ChangeOfVariables change_of_variables(const IntMatrix& w, const IntMatrix& a, const IntVector& c);

}  // namespace tudim
