#include "tudim/tu.hpp"

#include <stdexcept>

#include "tudim/errors.hpp"
#include "tudim/detail/combinatorics.hpp"
#include "tudim/linalg.hpp"

namespace tudim {

namespace {

// First entry with |value| >= 2 becomes a 1x1 violation, which keeps is_tu
// total on arbitrary integer matrices.
std::optional<TuViolation> entry_violation(const IntMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const Int& v = m(i, j);
      if (v != 0 && v != 1 && v != -1) return TuViolation{{i}, {j}, v};
    }
  return std::nullopt;
}

TuVerdict is_tu_minor(const IntMatrix& m) {
  if (auto v = entry_violation(m)) return {false, v};
  std::optional<TuViolation> found;
  int max_size = std::min(m.rows(), m.cols());
  for (int s = 2; s <= max_size && !found; ++s) {
    detail::for_each_combination(m.rows(), s, [&](const std::vector<int>& ri) {
      return detail::for_each_combination(m.cols(), s, [&](const std::vector<int>& ci) {
        Int d = det(m.submatrix(ri, ci));
        if (d > 1 || d < -1) {
          found = TuViolation{ri, ci, d};
          return false;
        }
        return true;
      });
    });
  }
  return {!found.has_value(), found};
}

TuVerdict is_tu_ghouila_houri(const IntMatrix& m) {
  if (auto v = entry_violation(m)) return {false, v};
  const int rows = m.rows(), cols = m.cols();
  for (unsigned mask = 1; mask < (1u << rows); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < rows; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    const int k = static_cast<int>(subset.size());
    bool signable = false;
    // Global sign symmetry: pin the first row's sign to +1.
    for (unsigned signs = 0; signs < (1u << (k - 1)) && !signable; ++signs) {
      bool ok = true;
      for (int j = 0; j < cols && ok; ++j) {
        Int sum(0);
        for (int t = 0; t < k; ++t) {
          bool neg = t > 0 && (signs & (1u << (t - 1)));
          if (neg)
            sum -= m(subset[t], j);
          else
            sum += m(subset[t], j);
        }
        ok = sum >= -1 && sum <= 1;
      }
      signable = ok;
    }
    if (!signable) return {false, std::nullopt};
  }
  return {true, std::nullopt};
}

}  // namespace

TuVerdict is_tu(const IntMatrix& m, TuMethod method) {
  switch (method) {
    case TuMethod::minor:
      return is_tu_minor(m);
    case TuMethod::ghouila_houri:
      return is_tu_ghouila_houri(m);
    case TuMethod::cross: {
      TuVerdict a = is_tu_minor(m);
      TuVerdict b = is_tu_ghouila_houri(m);
      internal_check(a.is_tu == b.is_tu, "is_tu: minor and ghouila-houri testers disagree");
      return a;
    }
  }
  throw std::invalid_argument("is_tu: unknown method");
}

bool is_unimodular(const IntMatrix& m) {
  const int r = m.rows();
  if (r == 0) return true;
  if (rank(m) != r) return false;
  bool ok = true;
  detail::for_each_combination(m.cols(), r, [&](const std::vector<int>& ci) {
    std::vector<int> rows(r);
    for (int i = 0; i < r; ++i) rows[i] = i;
    Int d = det(m.submatrix(rows, ci));
    if (d > 1 || d < -1) {
      ok = false;
      return false;
    }
    return true;
  });
  return ok;
}

bool is_almost_tu(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("is_almost_tu: matrix not square");
  if (!entries_in_zero_pm_one(m)) throw std::invalid_argument("is_almost_tu: entry outside {0,+-1}");
  const int n = m.rows();
  // Every proper submatrix TU <=> every square submatrix of size < n has
  // determinant in {0,+-1}; entries are already in range.
  bool proper_ok = true;
  for (int s = 2; s <= n - 1 && proper_ok; ++s) {
    detail::for_each_combination(n, s, [&](const std::vector<int>& ri) {
      return detail::for_each_combination(n, s, [&](const std::vector<int>& ci) {
        Int d = det(m.submatrix(ri, ci));
        if (d > 1 || d < -1) {
          proper_ok = false;
          return false;
        }
        return true;
      });
    });
  }
  if (!proper_ok) return false;
  Int d = det(m);
  return d > 1 || d < -1;
}

IntMatrix tu_kernel(const IntMatrix& m) {
  if (!is_tu(m).is_tu) throw std::invalid_argument("tu_kernel: input is not totally unimodular");
  const int n = m.cols();
  RatMatrix red = to_rational(m);
  std::vector<int> pivots = rref_in_place(red);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < n; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  IntMatrix w(static_cast<int>(free_cols.size()), n);
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    int f = free_cols[fi];
    w(static_cast<int>(fi), f) = 1;
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) {
      const Rat& v = red(static_cast<int>(pi), f);
      internal_check(rat_is_integral(v), "tu_kernel: fractional reduced entry on TU input");
      w(static_cast<int>(fi), pivots[pi]) = -v.get_num();
    }
  }
  internal_check(entries_in_zero_pm_one(w), "tu_kernel: kernel entry outside {0,+-1}");
  internal_check(is_zero(m * w.transpose()), "tu_kernel: m * w^T != 0");
  internal_check(is_tu(w).is_tu, "tu_kernel: kernel matrix not TU");
  return w;
}

RatMatrix pivot_transform(const IntMatrix& m, int top_rows) {
  const int p = top_rows;
  const int q = m.rows() - p;
  if (p < 0 || q <= 0) throw std::invalid_argument("pivot_transform: bad row split");
  if (q > m.cols()) throw std::invalid_argument("pivot_transform: bottom-left block not square");
  const int s = m.cols() - q;

  std::vector<int> top(p), bottom(q), left(q), right(s);
  for (int i = 0; i < p; ++i) top[i] = i;
  for (int i = 0; i < q; ++i) bottom[i] = p + i;
  for (int j = 0; j < q; ++j) left[j] = j;
  for (int j = 0; j < s; ++j) right[j] = q + j;

  RatMatrix b = to_rational(m.submatrix(top, left));
  RatMatrix d = to_rational(m.submatrix(top, right));
  RatMatrix e = to_rational(m.submatrix(bottom, left));
  RatMatrix c = to_rational(m.submatrix(bottom, right));

  std::optional<RatMatrix> e_inv = inverse(e);
  if (!e_inv) throw std::invalid_argument("pivot_transform: singular pivot block");

  RatMatrix be = b * *e_inv;
  RatMatrix out(m.rows(), m.cols());
  RatMatrix top_right = d - be * c;
  RatMatrix bottom_right = *e_inv * c;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) out(i, j) = be(i, j);
    for (int j = 0; j < s; ++j) out(i, q + j) = top_right(i, j);
  }
  for (int i = 0; i < q; ++i) {
    for (int j = 0; j < q; ++j) out(p + i, j) = -(*e_inv)(i, j);
    for (int j = 0; j < s; ++j) out(p + i, q + j) = bottom_right(i, j);
  }
  return out;
}

}  // namespace tudim
