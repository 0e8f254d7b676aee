#include "hk/series/trunc_series.hpp"

#include "hk/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace hk {

TruncSeries::TruncSeries(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
}

TruncSeries TruncSeries::constant(const Scalar& value, std::size_t max_order) {
  TruncSeries s(max_order);
  s.coeffs_[0] = value;
  return s;
}

TruncSeries TruncSeries::truncated(std::size_t order) const {
  std::vector<Scalar> c(order + 1);
  for (std::size_t k = 0; k <= order && k < coeffs_.size(); ++k) c[k] = coeffs_[k];
  return TruncSeries(std::move(c));
}

// g = exp(f): k g_k = Σ_{j=1..k} j f_j g_{k-j}
TruncSeries TruncSeries::exp() const {
  if (!coeffs_[0].is_zero()) throw std::domain_error("exp of a series needs a zero constant term");
  TruncSeries g(max_order());
  g.coeffs_[0] = Scalar(1);
  for (std::size_t k = 1; k <= max_order(); ++k) {
    Scalar sum;
    for (std::size_t j = 1; j <= k; ++j) {
      if (!coeffs_[j].is_zero() && !g.coeffs_[k - j].is_zero()) sum += Scalar(static_cast<long>(j)) * coeffs_[j] * g.coeffs_[k - j];
    }
    g.coeffs_[k] = sum / Scalar(static_cast<long>(k));
  }
  return g;
}

// g = log(f), f_0 = 1: g_k = f_k − (1/k) Σ_{j=1..k-1} j g_j f_{k-j}
TruncSeries TruncSeries::log() const {
  if (coeffs_[0] != Scalar(1)) throw std::domain_error("log of a series needs constant term 1");
  TruncSeries g(max_order());
  for (std::size_t k = 1; k <= max_order(); ++k) {
    Scalar sum;
    for (std::size_t j = 1; j < k; ++j) {
      if (!g.coeffs_[j].is_zero() && !coeffs_[k - j].is_zero()) sum += Scalar(static_cast<long>(j)) * g.coeffs_[j] * coeffs_[k - j];
    }
    g.coeffs_[k] = coeffs_[k] - sum / Scalar(static_cast<long>(k));
  }
  return g;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
  const std::size_t order = std::min(a.max_order(), b.max_order());
  TruncSeries out(order);
  for (std::size_t k = 0; k <= order; ++k) out.coeffs_[k] = a.coeffs_[k] + b.coeffs_[k];
  return out;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
  const std::size_t order = std::min(a.max_order(), b.max_order());
  TruncSeries out(order);
  for (std::size_t k = 0; k <= order; ++k) out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return out;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
  const std::size_t order = std::min(a.max_order(), b.max_order());
  TruncSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (!b.coeffs_[j].is_zero()) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

TruncSeries operator*(const Scalar& s, const TruncSeries& a) {
  TruncSeries out(a.max_order());
  for (std::size_t k = 0; k <= a.max_order(); ++k) out.coeffs_[k] = s * a.coeffs_[k];
  return out;
}

MatrixSeries MatrixSeries::from_scalar(const TruncSeries& series, std::size_t dim) {
  std::vector<Matrix> coeffs;
  coeffs.reserve(series.max_order() + 1);
  for (const auto& c : series.coeffs()) coeffs.push_back(Matrix::scalar(dim, c));
  return MatrixSeries(std::move(coeffs));
}

MatrixSeries operator*(const MatrixSeries& a, const MatrixSeries& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("matrix series of different fiber sizes");
  const std::size_t order = std::min(a.max_order(), b.max_order());
  MatrixSeries out(a.dim(), order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= order; ++j) {
      if (!b[j].is_zero()) out.coeffs_[i + j] = add(out.coeffs_[i + j], mat_mul(a[i], b[j]));
    }
  }
  return out;
}

TruncSeries log_sinhc_coeffs(std::size_t order) {
  // sinh(x)/x = Σ x^{2m} / (2m+1)!
  TruncSeries sinhc(order);
  mpz_class factorial = 1;
  for (std::size_t k = 0; k <= order; ++k) {
    if (k > 0) factorial *= static_cast<unsigned long>(k + 1);
    if (k % 2 == 0) sinhc.at(k) = Scalar(Rational(mpz_class(1), factorial));
  }
  return sinhc.log();
}

}  // namespace hk
