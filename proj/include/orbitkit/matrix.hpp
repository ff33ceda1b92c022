#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "orbitkit/error.hpp"
#include "orbitkit/scalar.hpp"

namespace orbitkit {

template <class S>
using Vector = std::vector<S>;

/// Dense row-major matrix over a field scalar.
template <class S>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, S(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }

  static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw Error(ErrorCode::DimensionMismatch, "ragged initializer");
      std::size_t j = 0;
      for (long v : row) m(i, j++) = ScalarTraits<S>::from_int(v);
      ++i;
    }
    return m;
  }

  /// Matrix whose columns are the given vectors (all of equal length).
  static Matrix from_columns(std::span<const Vector<S>> columns) {
    if (columns.empty()) return {};
    Matrix m(columns.front().size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != m.rows_) throw Error(ErrorCode::DimensionMismatch, "column length");
      for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const S> data() const noexcept { return data_; }
  std::span<S> data() noexcept { return data_; }

  Vector<S> column(std::size_t j) const {
    Vector<S> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Vector<S> row(std::size_t i) const { return Vector<S>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<S> data_;
};

template <class S>
Matrix<S> matmul(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "matmul " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                                  " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  Matrix<S> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const S& aik = a(i, k);
      // representation matrices are mostly permutation matrices
      if (ScalarTraits<S>::is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

template <class S>
Matrix<S> operator*(const Matrix<S>& a, const Matrix<S>& b) {
  return matmul(a, b);
}

template <class S>
Vector<S> matvec(const Matrix<S>& a, std::span<const S> x) {
  if (a.cols() != x.size()) throw Error(ErrorCode::DimensionMismatch, "matvec");
  Vector<S> y(a.rows(), S(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (ScalarTraits<S>::is_zero(a(i, k))) continue;
      y[i] += a(i, k) * x[k];
    }
  }
  return y;
}

template <class S>
Matrix<S> transpose(const Matrix<S>& a) {
  Matrix<S> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

/// Conjugate transpose; equals transpose on the exact path.
template <class S>
Matrix<S> adjoint(const Matrix<S>& a) {
  Matrix<S> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = ScalarTraits<S>::conj(a(i, j));
  return t;
}

template <class S>
Matrix<S> operator-(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::DimensionMismatch, "matrix difference");
  Matrix<S> c = a;
  auto out = c.data();
  auto rhs = b.data();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= rhs[i];
  return c;
}

template <class S>
double max_magnitude(const Matrix<S>& a) {
  double m = 0.0;
  for (const S& v : a.data()) m = std::max(m, ScalarTraits<S>::magnitude(v));
  return m;
}

template <class S>
double max_magnitude(std::span<const S> v) {
  double m = 0.0;
  for (const S& e : v) m = std::max(m, ScalarTraits<S>::magnitude(e));
  return m;
}

}  // namespace orbitkit
