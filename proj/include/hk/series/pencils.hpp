#pragma once

#include "hk/series/series_poly.hpp"
#include "hk/series/trunc_series.hpp"

#include <span>

namespace hk {

/// det(sinh(X)/X)^exponent for X = s·scale·Σ ω^i A_i, computed as
/// exp(exponent · Σ_m c_m tr[X^{2m}]) with c_m the log-sinhc coefficients.
/// Scalar-valued (dim 1). `vars` is the number of ω variables (= A.size()
/// unless A is empty). Throws std::invalid_argument when the limits are
/// inconsistent (ω-degree above the s-order, or odd limits).
SeriesPoly det_sinhc_pencil(std::span<const Matrix> A, std::size_t size, std::size_t vars, const Scalar& scale,
                            const Rational& exponent, SeriesLimits limits);

/// Σ_m (s·R(ω))^{2m} / (2m)!, R(ω) = Σ ω^i R_i, matrix-valued.
SeriesPoly cosh_pencil(std::span<const Matrix> R, std::size_t dim, SeriesLimits limits);

/// Σ_m t^m M^m / m! through t^t_order.
MatrixSeries matrix_exp_series(const Matrix& M, std::size_t t_order);

/// det(sinh(tB)/(tB))^exponent as a series in t via the trace-log route.
TruncSeries det_sinhc_numeric(const Matrix& B, const Rational& exponent, std::size_t t_order);

}  // namespace hk
