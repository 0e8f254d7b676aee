#include "hk/series/pencils.hpp"

#include "hk/errors.hpp"

#include <stdexcept>

namespace hk {

namespace {

void check_limits(SeriesLimits limits) {
  if (limits.omega_degree > limits.s_order) {
    throw std::invalid_argument("truncation limits inconsistent: omega degree exceeds s order");
  }
}

}  // namespace

SeriesPoly det_sinhc_pencil(std::span<const Matrix> A, std::size_t size, std::size_t vars, const Scalar& scale,
                            const Rational& exponent, SeriesLimits limits) {
  check_limits(limits);
  if (!A.empty() && A.size() != vars) throw DimensionMismatch("pencil has a different number of variables");
  const SeriesPoly one = SeriesPoly::constant(vars, Matrix::identity(1), limits);
  if (A.empty()) return one;

  const SeriesPoly x = SeriesPoly::pencil(A, size, scale, limits);
  const std::size_t top = limits.s_order;  // x carries one s per factor
  const TruncSeries c = log_sinhc_coeffs(top);
  SeriesPoly log_det(vars, 1, limits);
  SeriesPoly power = x;
  for (std::size_t k = 2; k <= top; k += 2) {
    power = power * x;  // x^k
    if (power.empty()) break;
    log_det = log_det + power.trace().scaled(c[k]);
    power = power * x;
  }
  return log_det.scaled(Scalar(exponent)).exp();
}

SeriesPoly cosh_pencil(std::span<const Matrix> R, std::size_t dim, SeriesLimits limits) {
  const std::size_t vars = R.size();
  SeriesPoly result = SeriesPoly::constant(vars, Matrix::identity(dim), limits);
  if (R.empty()) return result;
  const SeriesPoly x = SeriesPoly::pencil(R, dim, Scalar(1), limits);
  const SeriesPoly x2 = x * x;
  SeriesPoly term = result;
  for (long m = 1; ; ++m) {
    term = (term * x2).scaled(Scalar::fraction(1, (2 * m - 1) * (2 * m)));
    if (term.empty()) break;
    result = result + term;
  }
  return result;
}

MatrixSeries matrix_exp_series(const Matrix& M, std::size_t t_order) {
  if (!M.is_square()) throw DimensionMismatch("matrix_exp_series needs a square matrix");
  MatrixSeries out(M.rows(), t_order);
  Matrix term = Matrix::identity(M.rows());
  out.at(0) = term;
  for (std::size_t m = 1; m <= t_order; ++m) {
    term = scale(Scalar::fraction(1, static_cast<long>(m)), mat_mul(term, M));
    out.at(m) = term;
  }
  return out;
}

TruncSeries det_sinhc_numeric(const Matrix& B, const Rational& exponent, std::size_t t_order) {
  if (!B.is_square()) throw DimensionMismatch("det_sinhc_numeric needs a square matrix");
  const TruncSeries c = log_sinhc_coeffs(t_order);
  TruncSeries log_det(t_order);
  const Matrix B2 = mat_mul(B, B);
  Matrix power = Matrix::identity(B.rows());
  for (std::size_t k = 2; k <= t_order; k += 2) {
    power = mat_mul(power, B2);
    log_det.at(k) = Scalar(exponent) * c[k] * trace(power);
  }
  return log_det.exp();
}

}  // namespace hk
