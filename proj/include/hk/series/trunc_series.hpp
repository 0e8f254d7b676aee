#pragma once

#include "hk/exact/matrix.hpp"

#include <cstddef>
#include <vector>

namespace hk {

/// Power series in one formal variable truncated after max_order. Arithmetic
/// never looks at coefficients beyond max_order; binary operations truncate
/// to the smaller order of the operands.
class TruncSeries {
 public:
  explicit TruncSeries(std::size_t max_order) : coeffs_(max_order + 1) {}
  explicit TruncSeries(std::vector<Scalar> coeffs);

  static TruncSeries constant(const Scalar& value, std::size_t max_order);

  std::size_t max_order() const { return coeffs_.size() - 1; }
  const Scalar& operator[](std::size_t k) const { return coeffs_[k]; }
  Scalar& at(std::size_t k) { return coeffs_[k]; }
  /// Zero beyond max_order.
  Scalar coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  TruncSeries truncated(std::size_t order) const;

  /// Requires a zero constant term so the result stays rational; throws std::domain_error otherwise.
  TruncSeries exp() const;
  /// Requires constant term one; throws std::domain_error otherwise.
  TruncSeries log() const;

  friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
  friend TruncSeries operator*(const Scalar& s, const TruncSeries& a);
  friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Scalar> coeffs_;
};

/// Series whose coefficients are equally sized matrices.
class MatrixSeries {
 public:
  MatrixSeries(std::size_t dim, std::size_t max_order) : coeffs_(max_order + 1, Matrix(dim, dim)) {}
  explicit MatrixSeries(std::vector<Matrix> coeffs) : coeffs_(std::move(coeffs)) {}

  static MatrixSeries from_scalar(const TruncSeries& series, std::size_t dim);

  std::size_t max_order() const { return coeffs_.size() - 1; }
  std::size_t dim() const { return coeffs_.front().rows(); }
  const Matrix& operator[](std::size_t k) const { return coeffs_[k]; }
  Matrix& at(std::size_t k) { return coeffs_[k]; }
  const std::vector<Matrix>& coeffs() const { return coeffs_; }

  friend MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b);

 private:
  std::vector<Matrix> coeffs_;
};

/// log(sinh(x)/x) = x²/6 − x⁴/180 + x⁶/2835 − … through x^order.
TruncSeries log_sinhc_coeffs(std::size_t order);

}  // namespace hk
