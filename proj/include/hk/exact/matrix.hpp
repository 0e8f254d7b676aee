#pragma once

#include "hk/exact/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace hk {

/// Dense row-major matrix of exact Gaussian rationals. A value type: every
/// operation returns a fresh matrix, and at() is only meant for assembling a
/// matrix before it is shared.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static Matrix scalar(std::size_t n, const Scalar& value);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<const Scalar> entries() const { return data_; }

  bool is_zero() const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;
  bool is_real() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Exact product; throws DimensionMismatch unless a.cols() == b.rows().
Matrix mat_mul(const Matrix& a, const Matrix& b);
/// a·b − b·a for equally sized square matrices.
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix scale(const Scalar& factor, const Matrix& m);
Matrix transpose(const Matrix& m);
Matrix kron(const Matrix& a, const Matrix& b);
/// Throws DimensionMismatch for non-square input.
Scalar trace(const Matrix& m);
/// tr(a·b) without forming the product.
Scalar trace_of_product(const Matrix& a, const Matrix& b);
/// Exact inverse; throws std::domain_error when singular.
Matrix inverse(const Matrix& m);
/// Σ_i weights[i]·terms[i]; all terms share one shape.
Matrix linear_combination(std::span<const Scalar> weights, std::span<const Matrix> terms);

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }
inline Matrix operator+(const Matrix& a, const Matrix& b) { return add(a, b); }
inline Matrix operator-(const Matrix& a, const Matrix& b) { return sub(a, b); }
inline Matrix operator-(const Matrix& a) { return scale(Scalar(-1), a); }
inline Matrix operator*(const Scalar& s, const Matrix& m) { return scale(s, m); }

}  // namespace hk
