#include "tudim/linalg.hpp"

#include <stdexcept>

#include "tudim/errors.hpp"

namespace tudim {

Int det(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix not square");
  const int n = m.rows();
  if (n == 0) return Int(1);
  IntMatrix a = m;
  Int prev(1);
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return Int(0);
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        // Bareiss: division by the previous pivot is exact.
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  Int d = a(n - 1, n - 1);
  return sign > 0 ? d : Int(-d);
}

std::vector<int> rref_in_place(RatMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    m.swap_rows(r, p);
    Rat inv = m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) /= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(const RatMatrix& m) {
  RatMatrix a = m;
  return static_cast<int>(rref_in_place(a).size());
}

RatMatrix kernel_basis(const RatMatrix& m) {
  RatMatrix a = m;
  std::vector<int> pivots = rref_in_place(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;

  std::vector<int> free_cols;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  RatMatrix k(m.cols(), static_cast<int>(free_cols.size()));
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    int f = free_cols[fi];
    k(f, static_cast<int>(fi)) = 1;
    for (std::size_t pi = 0; pi < pivots.size(); ++pi)
      k(pivots[pi], static_cast<int>(fi)) = -a(static_cast<int>(pi), f);
  }
  return k;
}

std::optional<RatVector> solve_linear(const RatMatrix& m, const RatVector& v) {
  if (static_cast<int>(v.size()) != m.rows()) throw std::invalid_argument("solve_linear: rhs size mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = v[i];
  }
  std::vector<int> pivots = rref_in_place(aug);
  // An inconsistent system pivots in the augmented column.
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RatVector x(m.cols(), Rat(0));
  for (std::size_t pi = 0; pi < pivots.size(); ++pi)
    x[pivots[pi]] = aug(static_cast<int>(pi), m.cols());
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix not square");
  const int n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  std::vector<int> pivots = rref_in_place(aug);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

HnfColumns hnf_columns(const IntMatrix& w) {
  const int k = w.rows();
  const int n = w.cols();
  if (rank(w) != k) throw std::invalid_argument("hnf_columns: matrix does not have full row rank");

  IntMatrix a = w;
  IntMatrix l = IntMatrix::identity(n);

  auto col_axpy = [&](IntMatrix& m, int dst, int src, const Int& f) {
    // col dst += f * col src
    for (int i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
  };
  auto col_combine = [&](int ci, int cj, const Int& p, const Int& q, const Int& adg, const Int& bdg) {
    // [col ci, col cj] <- [col ci, col cj] * [[p, -bdg],[q, adg]]; det = 1
    for (IntMatrix* m : {&a, &l}) {
      for (int i = 0; i < m->rows(); ++i) {
        Int x = (*m)(i, ci), y = (*m)(i, cj);
        (*m)(i, ci) = p * x + q * y;
        (*m)(i, cj) = adg * y - bdg * x;
      }
    }
  };

  for (int i = 0; i < k; ++i) {
    int first = -1;
    for (int j = i; j < n; ++j)
      if (a(i, j) != 0) {
        first = j;
        break;
      }
    internal_check(first >= 0, "hnf_columns: zero row despite full rank");
    if (first != i) {
      a.swap_cols(i, first);
      l.swap_cols(i, first);
    }
    for (int j = i + 1; j < n; ++j) {
      if (a(i, j) == 0) continue;
      Int g, p, q;
      mpz_gcdext(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), a(i, i).get_mpz_t(), a(i, j).get_mpz_t());
      Int adg = a(i, i) / g, bdg = a(i, j) / g;
      col_combine(i, j, p, q, adg, bdg);
    }
    if (a(i, i) < 0) {
      for (int r = 0; r < a.rows(); ++r) a(r, i) = -a(r, i);
      for (int r = 0; r < l.rows(); ++r) l(r, i) = -l(r, i);
    }
    // Hermite-reduce entries to the left of the diagonal into [0, a(i,i)).
    for (int j = 0; j < i; ++j) {
      Int f;
      mpz_fdiv_q(f.get_mpz_t(), a(i, j).get_mpz_t(), a(i, i).get_mpz_t());
      if (f != 0) {
        col_axpy(a, j, i, Int(-f));
        col_axpy(l, j, i, Int(-f));
      }
    }
  }

  Int dl = det(l);
  internal_check(dl == 1 || dl == -1, "hnf_columns: transform is not unimodular");
  for (int i = 0; i < k; ++i)
    for (int j = k; j < n; ++j) internal_check(a(i, j) == 0, "hnf_columns: right block not cleared");

  HnfColumns out;
  out.l = std::move(l);
  std::vector<int> head(k);
  for (int j = 0; j < k; ++j) head[j] = j;
  std::vector<int> all_rows(k);
  for (int i = 0; i < k; ++i) all_rows[i] = i;
  out.h = a.submatrix(all_rows, head);
  return out;
}

std::vector<int> leftmost_independent_cols(const RatMatrix& m) {
  std::vector<int> chosen;
  int r = 0;
  RatMatrix work(m.rows(), 0);
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::vector<int> cand = chosen;
    cand.push_back(c);
    RatMatrix sub = m.select_cols(cand);
    if (rank(sub) == static_cast<int>(cand.size())) {
      chosen = std::move(cand);
      ++r;
    }
  }
  return chosen;
}

std::vector<int> leftmost_independent_rows(const RatMatrix& m) {
  RatMatrix t = m.transpose();
  return leftmost_independent_cols(t);
}

}  // namespace tudim
