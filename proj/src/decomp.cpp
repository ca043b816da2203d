#include "tudim/decomp.hpp"

#include <algorithm>
#include <stdexcept>

#include "tudim/detail/combinatorics.hpp"
#include "tudim/errors.hpp"
#include "tudim/linalg.hpp"
#include "tudim/tu.hpp"

namespace tudim {

Diagnosis verify_affine(const IntMatrix& a, const AffineTuDecomposition& d) {
  if (d.a_tilde.rows() != a.rows() || d.a_tilde.cols() != a.cols() || d.u_mat.rows() != a.rows() ||
      d.u_mat.cols() != d.w_mat.rows() || d.w_mat.cols() != a.cols())
    return {false, "dimension mismatch"};
  if (a != d.a_tilde + d.u_mat * d.w_mat) return {false, "a != a_tilde + u*w"};
  if (!entries_in_zero_pm_one(d.a_tilde)) return {false, "a_tilde entry outside {0,+-1}"};
  if (!entries_in_zero_pm_one(d.w_mat)) return {false, "w entry outside {0,+-1}"};
  if (!is_tu(IntMatrix::vcat(d.a_tilde, d.w_mat)).is_tu) return {false, "stacked [a_tilde; w] not TU"};
  return {true, ""};
}

Diagnosis verify_tu(const IntMatrix& a, const TuDecomposition& d) {
  if (d.u_mat.rows() != a.rows() || d.u_mat.cols() != d.w_mat.rows() || d.w_mat.cols() != a.cols())
    return {false, "dimension mismatch"};
  if (a != d.u_mat * d.w_mat) return {false, "a != u*w"};
  if (!entries_in_zero_pm_one(d.w_mat)) return {false, "w entry outside {0,+-1}"};
  if (!is_tu(d.w_mat).is_tu) return {false, "w not TU"};
  return {true, ""};
}

AffineTuDecomposition reduce_full_rank(const IntMatrix& a, const AffineTuDecomposition& d) {
  Diagnosis diag = verify_affine(a, d);
  if (!diag.ok) throw std::invalid_argument("reduce_full_rank: invalid decomposition: " + diag.failure);
  const int k = d.k();
  RatMatrix wr = to_rational(d.w_mat);
  std::vector<int> keep = leftmost_independent_rows(wr);
  if (static_cast<int>(keep.size()) == k) return d;

  const int r = static_cast<int>(keep.size());
  std::vector<bool> kept(k, false);
  for (int i : keep) kept[i] = true;
  std::vector<int> dropped;
  for (int i = 0; i < k; ++i)
    if (!kept[i]) dropped.push_back(i);

  IntMatrix w_i = d.w_mat.select_rows(keep);
  // Solve each dropped row as an integral combination of the kept rows. The
  // solve runs on a +-1-determinant column basis, so the solution is integral.
  std::vector<int> basis_cols = leftmost_independent_cols(w_i);
  internal_check(static_cast<int>(basis_cols.size()) == r, "reduce_full_rank: rank drop in kept rows");
  RatMatrix w_i_basis_t = to_rational(w_i.select_cols(basis_cols)).transpose();

  IntMatrix r_mat(static_cast<int>(dropped.size()), r);
  for (std::size_t di = 0; di < dropped.size(); ++di) {
    RatVector rhs(r);
    for (int c = 0; c < r; ++c) rhs[c] = Rat(d.w_mat(dropped[di], basis_cols[c]));
    std::optional<RatVector> sol = solve_linear(w_i_basis_t, rhs);
    internal_check(sol.has_value(), "reduce_full_rank: dependent row not solvable on basis");
    RatVector full = to_rational(w_i).transpose() * *sol;
    for (int c = 0; c < d.w_mat.cols(); ++c)
      internal_check(full[c] == Rat(d.w_mat(dropped[di], c)), "reduce_full_rank: row not in span of kept rows");
    for (int c = 0; c < r; ++c) {
      internal_check(rat_is_integral((*sol)[c]), "reduce_full_rank: fractional combination on TU rows");
      r_mat(static_cast<int>(di), c) = (*sol)[c].get_num();
    }
  }

  IntMatrix u_kept = d.u_mat.select_cols(keep);
  IntMatrix u_dropped = d.u_mat.select_cols(dropped);
  IntMatrix u_new = u_kept + u_dropped * r_mat;

  AffineTuDecomposition out{d.a_tilde, u_new, w_i};
  Diagnosis check = verify_affine(a, out);
  internal_check(check.ok, "reduce_full_rank: reduced decomposition invalid");
  return out;
}

CanonicalizeResult canonicalize_identity(const IntMatrix& w) {
  const int k = w.rows();
  if (rank(w) != k) throw std::invalid_argument("canonicalize_identity: w does not have full row rank");
  if (!is_tu(w).is_tu) throw std::invalid_argument("canonicalize_identity: w not TU");

  std::vector<int> cols = leftmost_independent_cols(w);
  RatMatrix w1 = to_rational(w.select_cols(cols));
  std::optional<RatMatrix> inv = inverse(w1);
  internal_check(inv.has_value(), "canonicalize_identity: singular column basis");
  std::optional<IntMatrix> t = to_integer(*inv);
  internal_check(t.has_value(), "canonicalize_identity: non-integral inverse of TU basis");

  IntMatrix wp = *t * w;
  internal_check(entries_in_zero_pm_one(wp), "canonicalize_identity: transformed entry outside {0,+-1}");
  internal_check(is_tu(wp).is_tu, "canonicalize_identity: transformed w not TU");
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < k; ++i)
      internal_check(wp(i, cols[j]) == (i == j ? 1 : 0), "canonicalize_identity: identity not at basis columns");
  return {*t, wp, cols};
}

namespace {

bool transversal_exists(const std::vector<std::vector<int>>& options, std::size_t level, int min_col) {
  if (level == options.size()) return true;
  for (int c : options[level])
    if (c > min_col && transversal_exists(options, level + 1, c)) return true;
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_identity_columns(const IntMatrix& w) {
  const int k = w.rows();
  if (k == 0) return std::vector<int>{};
  std::vector<std::vector<int>> options(k);
  for (int j = 0; j < w.cols(); ++j) {
    int unit = -1;
    bool is_unit = true;
    for (int i = 0; i < k && is_unit; ++i) {
      if (w(i, j) == 1) {
        if (unit >= 0)
          is_unit = false;
        else
          unit = i;
      } else if (w(i, j) != 0) {
        is_unit = false;
      }
    }
    if (is_unit && unit >= 0) options[unit].push_back(j);
  }
  // Lexicographically smallest increasing transversal.
  std::vector<int> pick;
  int last = -1;
  for (int level = 0; level < k; ++level) {
    bool advanced = false;
    for (int c : options[level]) {
      if (c <= last) continue;
      if (transversal_exists(options, level + 1, c)) {
        pick.push_back(c);
        last = c;
        advanced = true;
        break;
      }
    }
    if (!advanced) return std::nullopt;
  }
  return pick;
}

namespace {

void check_identity_form(const IntMatrix& w, const std::vector<int>& identity_cols) {
  const int k = w.rows();
  if (static_cast<int>(identity_cols.size()) != k)
    throw std::invalid_argument("given-w: identity column list size != k");
  for (int j = 0; j < k; ++j) {
    int c = identity_cols[j];
    if (c < 0 || c >= w.cols()) throw std::invalid_argument("given-w: identity column out of range");
    if (j > 0 && identity_cols[j - 1] >= c) throw std::invalid_argument("given-w: identity columns not increasing");
    for (int i = 0; i < k; ++i)
      if (w(i, c) != (i == j ? 1 : 0)) throw std::invalid_argument("given-w: no identity at claimed columns");
  }
  if (!entries_in_zero_pm_one(w)) throw std::invalid_argument("given-w: w entry outside {0,+-1}");
}

std::vector<int> complement_cols(int n, const std::vector<int>& chosen) {
  std::vector<bool> in(n, false);
  for (int c : chosen) in[c] = true;
  std::vector<int> rest;
  for (int c = 0; c < n; ++c)
    if (!in[c]) rest.push_back(c);
  return rest;
}

}  // namespace

std::optional<AffineTuDecomposition> decide_affine_given_w(const IntMatrix& a, const IntMatrix& w,
                                                           const std::vector<int>& identity_cols) {
  if (w.cols() != a.cols()) throw std::invalid_argument("decide_affine_given_w: column count mismatch");
  check_identity_form(w, identity_cols);
  const int k = w.rows();
  std::vector<int> rest = complement_cols(a.cols(), identity_cols);

  IntMatrix a1 = a.select_cols(identity_cols);
  IntMatrix a2 = a.select_cols(rest);
  IntMatrix w2 = w.select_cols(rest);
  IntMatrix criterion = IntMatrix::vcat(a2 - a1 * w2, w2);
  if (!is_tu(criterion).is_tu) return std::nullopt;

  IntMatrix a_tilde(a.rows(), a.cols());
  IntMatrix top = a2 - a1 * w2;
  for (std::size_t c = 0; c < rest.size(); ++c)
    for (int i = 0; i < a.rows(); ++i) a_tilde(i, rest[c]) = top(i, static_cast<int>(c));

  AffineTuDecomposition out{std::move(a_tilde), a1, w};
  Diagnosis diag = verify_affine(a, out);
  internal_check(diag.ok, "decide_affine_given_w: constructed decomposition invalid");
  (void)k;
  return out;
}

std::optional<TuDecomposition> decide_tu_given_w(const IntMatrix& a, const IntMatrix& w,
                                                 const std::vector<int>& identity_cols) {
  if (w.cols() != a.cols()) throw std::invalid_argument("decide_tu_given_w: column count mismatch");
  check_identity_form(w, identity_cols);
  if (!is_tu(w).is_tu) throw std::invalid_argument("decide_tu_given_w: w not TU");
  std::vector<int> rest = complement_cols(a.cols(), identity_cols);

  IntMatrix a1 = a.select_cols(identity_cols);
  IntMatrix a2 = a.select_cols(rest);
  IntMatrix w2 = w.select_cols(rest);
  if (a2 != a1 * w2) return std::nullopt;

  TuDecomposition out{a1, w};
  Diagnosis diag = verify_tu(a, out);
  internal_check(diag.ok, "decide_tu_given_w: constructed decomposition invalid");
  return out;
}

DedupColumns dedup_columns(const IntMatrix& a) {
  DedupColumns out;
  out.col_map.resize(a.cols());
  std::vector<int> keep;
  for (int j = 0; j < a.cols(); ++j) {
    int found = -1;
    for (std::size_t t = 0; t < keep.size() && found < 0; ++t) {
      bool same = true;
      for (int i = 0; i < a.rows() && same; ++i) same = a(i, keep[t]) == a(i, j);
      if (same) found = static_cast<int>(t);
    }
    if (found < 0) {
      keep.push_back(j);
      found = static_cast<int>(keep.size()) - 1;
    }
    out.col_map[j] = found;
  }
  out.matrix = a.select_cols(keep);
  return out;
}

LowerBounds lower_bounds(const IntMatrix& a) {
  const int c = dedup_columns(a).matrix.cols();
  auto heller_min = [](long long cols) {
    int k = 0;
    while (static_cast<long long>(k) * k + k + 1 < cols) ++k;
    return k;
  };
  LowerBounds out;
  out.rank_bound = rank(a);
  out.heller_tu = heller_min(c);
  out.heller_affine = std::max(0, heller_min(c) - a.rows());
  return out;
}

namespace {

// Lifts a deduped-column certificate back to the original column multiset.
// Duplicating columns of a_tilde and w preserves total unimodularity.
IntMatrix lift_cols(const IntMatrix& m, const std::vector<int>& col_map) {
  IntMatrix out(m.rows(), static_cast<int>(col_map.size()));
  for (std::size_t j = 0; j < col_map.size(); ++j)
    for (int i = 0; i < m.rows(); ++i) out(i, static_cast<int>(j)) = m(i, col_map[j]);
  return out;
}

struct SearchCallbacks {
  // Returns true when a certificate was produced for this candidate.
  virtual bool try_k0(const IntMatrix& a_dedup) = 0;
  virtual bool try_candidate(const IntMatrix& a_dedup, const IntMatrix& w, const std::vector<int>& id_cols) = 0;
  virtual ~SearchCallbacks() = default;
};

DimensionReport run_dimension_search(const IntMatrix& a, DimensionKind kind, long long budget,
                                     int k_start, SearchCallbacks& cb) {
  DedupColumns dd = dedup_columns(a);
  const IntMatrix& ad = dd.matrix;
  const int n = ad.cols();

  DimensionReport report;
  report.kind = kind;
  report.bounds_used = lower_bounds(a);
  report.candidates_tried = 0;

  for (int k = k_start; k <= n; ++k) {
    if (k == 0) {
      ++report.candidates_tried;
      if (cb.try_k0(ad)) {
        report.value = 0;
        return report;
      }
      continue;
    }
    bool out_of_budget = false;
    bool hit = false;
    detail::for_each_combination(n, k, [&](const std::vector<int>& id_cols) {
      const int rest = n - k;
      // Odometer over w2 entries in row-major order, values -1 < 0 < 1.
      std::vector<int> digits(static_cast<std::size_t>(k) * rest, -1);
      for (;;) {
        if (++report.candidates_tried > budget) {
          out_of_budget = true;
          return false;
        }
        IntMatrix w(k, n);
        for (int j = 0; j < k; ++j) w(j, id_cols[j]) = 1;
        {
          std::vector<int> rest_cols = complement_cols(n, id_cols);
          for (int i = 0; i < k; ++i)
            for (int j = 0; j < rest; ++j) w(i, rest_cols[j]) = digits[static_cast<std::size_t>(i) * rest + j];
        }
        // Canonical-candidate pruning: identical w matrices reappear for
        // every identity system they contain; keep only the lex-least one.
        std::optional<std::vector<int>> canon = find_identity_columns(w);
        if (canon && *canon == id_cols) {
          if (cb.try_candidate(ad, w, id_cols)) {
            hit = true;
            return false;
          }
        }
        // Advance odometer.
        std::size_t pos = digits.size();
        while (pos > 0 && digits[pos - 1] == 1) digits[--pos] = -1;
        if (pos == 0) break;
        ++digits[pos - 1];
      }
      return true;
    });
    if (hit) {
      report.value = k;
      return report;
    }
    if (out_of_budget) {
      report.value = k;
      report.lower_bound_only = true;
      return report;
    }
  }
  throw InternalError("dimension search fell through; k = n must always certify");
}

}  // namespace

DimensionReport affine_tu_dimension(const IntMatrix& a, long long budget) {
  DedupColumns dd = dedup_columns(a);
  LowerBounds lb = lower_bounds(a);

  struct Cb : SearchCallbacks {
    const IntMatrix* orig;
    const std::vector<int>* col_map;
    std::optional<AffineTuDecomposition> cert;

    bool try_k0(const IntMatrix& ad) override {
      if (!is_tu(ad).is_tu) return false;
      AffineTuDecomposition lifted{lift_cols(ad, *col_map), IntMatrix(orig->rows(), 0), IntMatrix(0, orig->cols())};
      internal_check(verify_affine(*orig, lifted).ok, "affine dimension: k=0 lift invalid");
      cert = std::move(lifted);
      return true;
    }
    bool try_candidate(const IntMatrix& ad, const IntMatrix& w, const std::vector<int>& id) override {
      IntMatrix w2 = w.select_cols(complement_cols(ad.cols(), id));
      if (!is_tu(w2).is_tu) return false;
      std::optional<AffineTuDecomposition> d = decide_affine_given_w(ad, w, id);
      if (!d) return false;
      AffineTuDecomposition lifted{lift_cols(d->a_tilde, *col_map), d->u_mat, lift_cols(d->w_mat, *col_map)};
      internal_check(verify_affine(*orig, lifted).ok, "affine dimension: lifted certificate invalid");
      cert = std::move(lifted);
      return true;
    }
  } cb;
  cb.orig = &a;
  cb.col_map = &dd.col_map;

  DimensionReport report = run_dimension_search(a, DimensionKind::affine, budget,
                                                std::max(0, lb.heller_affine), cb);
  report.affine_certificate = std::move(cb.cert);
  return report;
}

DimensionReport tu_dimension(const IntMatrix& a, long long budget) {
  DedupColumns dd = dedup_columns(a);
  LowerBounds lb = lower_bounds(a);

  struct Cb : SearchCallbacks {
    const IntMatrix* orig;
    const std::vector<int>* col_map;
    std::optional<TuDecomposition> cert;

    bool try_k0(const IntMatrix& ad) override {
      if (!is_zero(ad)) return false;
      TuDecomposition lifted{IntMatrix(orig->rows(), 0), IntMatrix(0, orig->cols())};
      internal_check(verify_tu(*orig, lifted).ok, "tu dimension: k=0 lift invalid");
      cert = std::move(lifted);
      return true;
    }
    bool try_candidate(const IntMatrix& ad, const IntMatrix& w, const std::vector<int>& id) override {
      IntMatrix w2 = w.select_cols(complement_cols(ad.cols(), id));
      if (!is_tu(w2).is_tu) return false;
      std::optional<TuDecomposition> d = decide_tu_given_w(ad, w, id);
      if (!d) return false;
      TuDecomposition lifted{d->u_mat, lift_cols(d->w_mat, *col_map)};
      internal_check(verify_tu(*orig, lifted).ok, "tu dimension: lifted certificate invalid");
      cert = std::move(lifted);
      return true;
    }
  } cb;
  cb.orig = &a;
  cb.col_map = &dd.col_map;

  int k_start = std::max({0, lb.rank_bound, lb.heller_tu});
  DimensionReport report = run_dimension_search(a, DimensionKind::tu, budget, k_start, cb);
  report.tu_certificate = std::move(cb.cert);
  return report;
}

ChangeOfVariables change_of_variables(const IntMatrix& w, const IntMatrix& a, const IntVector& c) {
  if (!is_unimodular(w)) throw std::invalid_argument("change_of_variables: w not unimodular");
  if (a.cols() != w.cols() || static_cast<int>(c.size()) != w.cols())
    throw std::invalid_argument("change_of_variables: dimension mismatch");
  HnfColumns hnf = hnf_columns(w);
  internal_check(hnf.h == IntMatrix::identity(w.rows()),
                 "change_of_variables: Hermite head of a unimodular matrix must be the identity");
  ChangeOfVariables out;
  out.l = hnf.l;
  out.a_l = a * hnf.l;
  IntMatrix crow = IntMatrix::from_row(c) * hnf.l;
  out.c_l = crow.row(0);
  return out;
}

}  // namespace tudim
