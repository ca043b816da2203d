#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tudim/matrix.hpp"

namespace tudim {

// Exact determinant by fraction-free (Bareiss) elimination.
// Pivots are chosen deterministically: first nonzero in row-major scan.
Int det(const IntMatrix& m);

int rank(const RatMatrix& m);
inline int rank(const IntMatrix& m) { return rank(to_rational(m)); }

// Reduced row echelon form; returns pivot column indices.
std::vector<int> rref_in_place(RatMatrix& m);

// Columns span ker(m); cols(K) = cols(m) - rank(m). Free variables are set
// to unit values in ascending column order, so the basis is reproducible.
RatMatrix kernel_basis(const RatMatrix& m);
inline RatMatrix kernel_basis(const IntMatrix& m) { return kernel_basis(to_rational(m)); }

// Basic solution of m x = v with free variables at zero, or absent when the
// system is inconsistent.
std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& v);

// Inverse of a nonsingular square rational matrix.
std::optional<RatMatrix> inverse(const RatMatrix& m);

struct HnfColumns {
  IntMatrix l;  // n x n, |det| = 1
  IntMatrix h;  // k x k, lower-triangular Hermite block: w * l = [h 0]
};

// Column-style Hermite normal form of a full-row-rank integer matrix.
// When w is unimodular, h comes out as the identity.
HnfColumns hnf_columns(const IntMatrix& w);

// Greedy leftmost set of linearly independent columns (size = rank).
std::vector<int> leftmost_independent_cols(const RatMatrix& m);
inline std::vector<int> leftmost_independent_cols(const IntMatrix& m) {
  return leftmost_independent_cols(to_rational(m));
}
std::vector<int> leftmost_independent_rows(const RatMatrix& m);

}  // namespace tudim
