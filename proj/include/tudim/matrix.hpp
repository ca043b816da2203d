#pragma once

#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

#include "tudim/numbers.hpp"

namespace tudim {

// Dense row-major exact matrix. Everything here is tiny (desk scale), so
// there is no sparse machinery and no attempt at cache cleverness.
template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(check_size(rows, cols)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(init.begin()->size());
    data_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& row : init) {
      if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("ragged matrix initializer");
      for (const auto& v : row) data_.push_back(v);
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::vector<T> row(int i) const {
    std::vector<T> out(cols_);
    for (int j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
    return out;
  }
  std::vector<T> col(int j) const {
    std::vector<T> out(rows_);
    for (int i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix submatrix(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
    Matrix s(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
    for (int i = 0; i < s.rows(); ++i)
      for (int j = 0; j < s.cols(); ++j) s(i, j) = (*this)(row_idx[i], col_idx[j]);
    return s;
  }

  Matrix select_cols(const std::vector<int>& col_idx) const {
    std::vector<int> all(rows_);
    for (int i = 0; i < rows_; ++i) all[i] = i;
    return submatrix(all, col_idx);
  }
  Matrix select_rows(const std::vector<int>& row_idx) const {
    std::vector<int> all(cols_);
    for (int j = 0; j < cols_; ++j) all[j] = j;
    return submatrix(row_idx, all);
  }

  Matrix operator+(const Matrix& o) const {
    require_same_shape(o);
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] + o.data_[i];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    require_same_shape(o);
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = data_[i] - o.data_[i];
    return r;
  }
  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = -data_[i];
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == T(0)) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    if (cols_ != static_cast<int>(v.size())) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<T> r(rows_, T(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  static Matrix hcat(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("hcat row mismatch");
    Matrix r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
      for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
      for (int j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
    }
    return r;
  }
  static Matrix vcat(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols() && !a.empty() && !b.empty())
      throw std::invalid_argument("vcat col mismatch");
    int cols = a.rows() > 0 ? a.cols() : b.cols();
    Matrix r(a.rows() + b.rows(), cols);
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
    return r;
  }

  static Matrix from_row(const std::vector<T>& v) {
    Matrix r(1, static_cast<int>(v.size()));
    for (int j = 0; j < r.cols(); ++j) r(0, j) = v[j];
    return r;
  }
  static Matrix from_col(const std::vector<T>& v) {
    Matrix r(static_cast<int>(v.size()), 1);
    for (int i = 0; i < r.rows(); ++i) r(i, 0) = v[i];
    return r;
  }

  void swap_cols(int a, int b) {
    for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  void swap_rows(int a, int b) {
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  static std::size_t check_size(int rows, int cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
    return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
  }
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_;
  int cols_;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RatMatrix = Matrix<Rat>;

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

// Exact conversion; absent when any entry has a nontrivial denominator.
inline std::optional<IntMatrix> to_integer(const RatMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      if (!rat_is_integral(m(i, j))) return std::nullopt;
      r(i, j) = m(i, j).get_num();
    }
  return r;
}

inline bool entries_in_zero_pm_one(const IntMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const Int& v = m(i, j);
      if (v != 0 && v != 1 && v != -1) return false;
    }
  return true;
}

inline bool is_zero(const IntMatrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

}  // namespace tudim
