#pragma once

// Exact dense linear algebra over Q, Z and Z/p.

#include <cstdint>
#include <vector>

#include "exotic/polyring.hpp"

namespace exotic {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0)) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using QMatrix = Matrix<Rational>;
using ZMatrix = Matrix<BigInt>;

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m);
std::size_t rank(QMatrix m);
// Basis of {v : m v = 0}, one vector per column of the result.
QMatrix nullspace(const QMatrix& m);

// Fraction-free (Bareiss) determinant of a square integer matrix.
BigInt determinant(const ZMatrix& m);

// Matrices over Z/p with entries kept in [0, p).
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(std::size_t rows, std::size_t cols, std::int64_t p) : m_(rows, cols, 0), p_(p) {}

  static ModMatrix identity(std::size_t n, std::int64_t p);
  static ModMatrix from_integers(const ZMatrix& z, std::int64_t p);

  std::size_t rows() const noexcept { return m_.rows(); }
  std::size_t cols() const noexcept { return m_.cols(); }
  std::int64_t modulus() const noexcept { return p_; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return m_(r, c); }
  void set(std::size_t r, std::size_t c, std::int64_t v);

  ModMatrix operator*(const ModMatrix& other) const;
  ModMatrix operator+(const ModMatrix& other) const;
  ModMatrix operator-(const ModMatrix& other) const;
  ModMatrix scaled(std::int64_t k) const;
  bool is_zero() const;
  friend bool operator==(const ModMatrix& a, const ModMatrix& b) { return a.p_ == b.p_ && a.m_ == b.m_; }

  // Columns [begin, end) as a new matrix; hstack concatenates columns.
  ModMatrix columns(std::size_t begin, std::size_t end) const;
  static ModMatrix hstack(const ModMatrix& a, const ModMatrix& b);

  std::vector<std::size_t> rref_in_place();
  std::size_t rank() const;
  ModMatrix nullspace() const;
  // Independent columns spanning the column space.
  ModMatrix column_basis() const;
  // Solves this * x = b for each column of b; throws if inconsistent.
  ModMatrix solve(const ModMatrix& b) const;

 private:
  Matrix<std::int64_t> m_;
  std::int64_t p_ = 2;
};

std::int64_t mod_inverse(std::int64_t a, std::int64_t p);
bool is_prime(std::int64_t n);

}  // namespace exotic
