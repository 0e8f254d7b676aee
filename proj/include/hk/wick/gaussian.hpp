#pragma once

#include "hk/series/series_poly.hpp"
#include "hk/series/trunc_series.hpp"

#include <map>
#include <span>
#include <vector>

namespace hk {

/// Gaussian weight exp(−⟨ω, βω⟩/4) normalized to ⟨1⟩ = 1; only its
/// covariance ⟨ω^i ω^j⟩ = 2β^{ij} enters. β may be indefinite.
class GaussianWeight {
 public:
  /// Inverts β exactly and checks β·β⁻¹ = I. Throws std::invalid_argument
  /// when β is not square or not symmetric, std::domain_error when singular.
  explicit GaussianWeight(const Matrix& beta);

  std::size_t vars() const { return beta_inv_.rows(); }
  const Matrix& beta_inv() const { return beta_inv_; }
  /// 2β^{ij}.
  const Scalar& pair(std::size_t i, std::size_t j) const { return covariance_(i, j); }

 private:
  Matrix beta_inv_;
  Matrix covariance_;
};

/// Memoized Wick averages of ω-monomials given as exponent vectors. Pairs
/// the first present variable with every remaining factor, so each distinct
/// exponent vector is evaluated once. Not thread-safe.
class WickAverager {
 public:
  explicit WickAverager(const GaussianWeight& weight) : weight_(weight) {}

  const Scalar& average(const Monomial& exponents);
  const GaussianWeight& weight() const { return weight_; }

 private:
  const GaussianWeight& weight_;
  std::map<Monomial, Scalar> cache_;
};

/// ⟨ω^{i_1} … ω^{i_m}⟩ by pairing enumeration; zero for odd m.
Scalar average_monomial(std::span<const std::size_t> indices, const GaussianWeight& w);

/// Replaces every ω-monomial by its average. The result is a matrix series
/// in s; by parity only even powers of s can be non-zero.
MatrixSeries average_poly(const SeriesPoly& poly, const GaussianWeight& w);

/// Re-indexes an even series in s as a series in t = s² through t^t_order.
/// Throws std::logic_error when an odd power of s carries a non-zero matrix.
MatrixSeries even_part_in_t(const MatrixSeries& in_s, std::size_t t_order);

/// Closed-form moment (2k)!/k! · β^{(i_1 i_2} … β^{i_{2k-1} i_{2k})} for an
/// even index list, evaluated as Π e_v! / k! times the coefficient of u^e in
/// (uᵀβ⁻¹u)^k. Independent of the pairing recursion. Throws
/// std::invalid_argument for odd length.
Scalar symmetrized_moment(std::span<const std::size_t> indices, const GaussianWeight& w);

}  // namespace hk
