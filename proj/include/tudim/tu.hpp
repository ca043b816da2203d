#pragma once

#include <optional>
#include <vector>

#include "tudim/matrix.hpp"

namespace tudim {

enum class TuMethod { minor, ghouila_houri, cross };

struct TuViolation {
  std::vector<int> rows, cols;  // a square submatrix with |det| >= 2
  Int det;
};

struct TuVerdict {
  bool is_tu;
  // Present for the minor method (and for out-of-range entries in every
  // method); minimal in size since submatrices are enumerated by size.
  std::optional<TuViolation> violation;
};

// Total unimodularity test. The minor method enumerates square submatrices by
// increasing size and reports the first violation; ghouila-houri searches a
// +-1 signing with column sums in {0,+-1} for every row subset; cross runs
// both and raises InternalError if they ever disagree.
TuVerdict is_tu(const IntMatrix& m, TuMethod method = TuMethod::minor);

// Full row rank and every nonsingular maximal square submatrix has det +-1.
bool is_unimodular(const IntMatrix& m);

// Square, not TU, but every proper submatrix is TU.
// Entries outside {0,+-1} are rejected.
bool is_almost_tu(const IntMatrix& m);

// For TU m with n columns and rank r, a TU matrix w in {0,+-1}^{(n-r) x n}
// with im(w^T) = ker(m). Pivot columns are the leftmost independent ones.
IntMatrix tu_kernel(const IntMatrix& m);

// Block pivot of [[B,D],[E,C]] (E the square bottom-left block, rows below
// top_rows) into [[B E^-1, D - B E^-1 C], [-E^-1, E^-1 C]]. TU status of the
// input equals TU status of the output. Exact; result may be fractional for
// non-TU input.
RatMatrix pivot_transform(const IntMatrix& m, int top_rows);

}  // namespace tudim
