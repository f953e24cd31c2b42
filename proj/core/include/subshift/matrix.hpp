#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "subshift/errors.hpp"
#include "subshift/rational.hpp"

namespace subshift {

/// Small dense row-major matrix. Used with int64 for incidence matrices,
/// double for numerics and Rational for exact linear algebra.
template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, T fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix I(n, n);
    for (std::size_t i = 0; i < n; ++i) I(i, i) = T(1);
    return I;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::vector<T> row(std::size_t i) const {
    return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
  }

  /// Rows `r` and columns `c` (given by index lists) of this matrix.
  DenseMatrix sub(const std::vector<std::size_t>& r,
                  const std::vector<std::size_t>& c) const {
    DenseMatrix out(r.size(), c.size());
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) out(i, j) = (*this)(r[i], c[j]);
    return out;
  }

  template <class U>
  DenseMatrix<U> cast() const {
    DenseMatrix<U> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if constexpr (std::is_same_v<U, double> &&
                      !std::is_arithmetic_v<T>)
          out(i, j) = (*this)(i, j).template convert_to<double>();
        else
          out(i, j) = U((*this)(i, j));
      }
    return out;
  }

  DenseMatrix transposed() const {
    DenseMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch");
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x == T(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
      }
    return out;
  }

  friend std::vector<T> operator*(const DenseMatrix& a, const std::vector<T>& x) {
    std::vector<T> y(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
    return y;
  }

  friend std::vector<T> operator*(const std::vector<T>& x, const DenseMatrix& a) {
    std::vector<T> y(a.cols_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) y[j] += x[i] * a(i, j);
    return y;
  }

  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = DenseMatrix<std::int64_t>;

template <class T>
DenseMatrix<T> matrix_power(const DenseMatrix<T>& a, unsigned k) {
  DenseMatrix<T> result = DenseMatrix<T>::identity(a.rows()), base = a;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return result;
}

/// Solves a x = b for square nonsingular a. Exact for Rational, partial
/// pivoting for double.
template <class T>
std::vector<T> solve(DenseMatrix<T> a, std::vector<T> b) {
  const std::size_t n = a.rows();
  if (!a.square() || b.size() != n) throw std::invalid_argument("bad system");
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = n;
    if constexpr (std::is_floating_point_v<T>) {
      T best = 0;
      for (std::size_t r = col; r < n; ++r)
        if (std::abs(a(r, col)) > best) best = std::abs(a(r, col)), piv = r;
    } else {
      for (std::size_t r = col; r < n && piv == n; ++r)
        if (a(r, col) != T(0)) piv = r;
    }
    if (piv == n || a(piv, col) == T(0))
      throw std::domain_error("singular system");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      std::swap(b[piv], b[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == T(0)) continue;
      T f = a(r, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
      b[r] -= f * b[col];
    }
  }
  std::vector<T> x(n);
  for (std::size_t i = n; i-- > 0;) {
    T s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x[j];
    x[i] = s / a(i, i);
  }
  return x;
}

/// A nonzero vector spanning the kernel of `a` when that kernel is one
/// dimensional (exact arithmetic only).
std::vector<Rational> kernel_vector(DenseMatrix<Rational> a);

}  // namespace subshift
