#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "clifflab/rational.hpp"

namespace clifflab {

/// Dense row-major matrix over an exact scalar type (std::int64_t or Rational).
///
/// Products skip zero entries of the left factor, so multiplying by the
/// signed-permutation matrices that dominate this library costs O(n^2).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const T> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<const T> data() const noexcept { return data_; }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  Matrix operator-() const {
    Matrix r(*this);
    for (auto& x : r.data_) x = -x;
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      T* out = r.data_.data() + i * r.cols_;
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T(0)) continue;
        const T* brow = b.data_.data() + k * b.cols_;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (brow[j] == T(0)) continue;
          out[j] += aik * brow[j];
        }
      }
    }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  [[nodiscard]] bool is_zero() const {
    for (const auto& x : data_)
      if (x != T(0)) return false;
    return true;
  }

  [[nodiscard]] T trace() const {
    T t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;
using RatMatrix = Matrix<Rational>;

[[nodiscard]] RatMatrix to_rational(const IntMatrix& m);

/// Kronecker product.
template <class T>
[[nodiscard]] Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == T(0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

/// Block-diagonal sum.
template <class T>
[[nodiscard]] Matrix<T> direct_sum(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

/// Submatrix on the index range [begin, begin + size) in both directions.
template <class T>
[[nodiscard]] Matrix<T> principal_block(const Matrix<T>& m, std::size_t begin, std::size_t size) {
  Matrix<T> r(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) r(i, j) = m(begin + i, begin + j);
  return r;
}

template <class T>
[[nodiscard]] Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

/// trace(A B) without forming the product.
template <class T>
[[nodiscard]] T trace_product(const Matrix<T>& a, const Matrix<T>& b) {
  T t(0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == T(0) || b(k, i) == T(0)) continue;
      t += a(i, k) * b(k, i);
    }
  return t;
}

[[nodiscard]] bool is_skew(const RatMatrix& m);
[[nodiscard]] bool is_signed_permutation(const IntMatrix& m);

/// Largest absolute entry; the residual norm used in verification reports.
[[nodiscard]] Rational max_abs(const RatMatrix& m);

/// Number of skew-symmetric coordinates n(n-1)/2.
[[nodiscard]] constexpr std::size_t skew_dim(std::size_t n) noexcept { return n * (n - 1) / 2; }

/// Position of the pair (a, b), a < b, in the lexicographic basis of 2-forms.
[[nodiscard]] std::size_t pair_index(std::size_t n, std::size_t a, std::size_t b);

/// Coordinates of a skew matrix A in the basis {X_a ^ X_b}_{a<b}: coordinate (a,b)
/// is A(b, a), i.e. the 2-form g(A X_a, X_b).
[[nodiscard]] std::vector<Rational> skew_coords(const RatMatrix& a);

/// Inverse of skew_coords.
[[nodiscard]] RatMatrix skew_from_coords(std::size_t n, std::span<const Rational> coords);

/// Elementary rotation generator X_a ^ X_b: maps X_a to X_b and X_b to -X_a.
[[nodiscard]] RatMatrix elementary_skew(std::size_t n, std::size_t a, std::size_t b);

[[nodiscard]] std::string to_string(const RatMatrix& m);

}  // namespace clifflab
