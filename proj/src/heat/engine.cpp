#include "hk/heat/engine.hpp"

#include "hk/errors.hpp"
#include "hk/series/pencils.hpp"
#include "hk/wick/gaussian.hpp"

#include <string>

namespace hk {

namespace {

void check_compatible(const SymmetricSpaceModel& model, const FiberRep& rep) {
  if (rep.n() != model.n()) throw DimensionMismatch("bundle frame dimension differs from the space dimension");
  if (rep.R.size() != model.p()) throw DimensionMismatch("bundle holonomy generators do not match the space");
  if (rep.B.rows() != model.n() || rep.B.cols() != model.n()) throw DimensionMismatch("twist has the wrong size");
  for (const auto& Ri : rep.R) {
    if (mat_mul(rep.casimir, Ri) != mat_mul(Ri, rep.casimir)) {
      throw RepError("Casimir does not commute with the holonomy generators");
    }
  }
}

}  // namespace

HeatCoefficients heat_coefficients(const SymmetricSpaceModel& model, const FiberRep& rep, std::size_t k_max) {
  if (k_max > kMaxSupportedOrder) {
    throw TruncationOverflow("k_max " + std::to_string(k_max) + " exceeds the supported maximum " +
                             std::to_string(kMaxSupportedOrder));
  }
  check_compatible(model, rep);

  const std::size_t n = model.n();
  const std::size_t p = model.p();
  const std::size_t dim = rep.dim();
  const SeriesLimits limits = limits_for_order(k_max);
  const Scalar half = Scalar::fraction(1, 2);

  const SeriesPoly tangent = det_sinhc_pencil(model.D, n, p, half, Rational(-1, 2), limits);
  const SeriesPoly holonomy = det_sinhc_pencil(model.F, p, p, half, Rational(1, 2), limits);
  const SeriesPoly hyperbolic = cosh_pencil(rep.R, dim, limits);
  const SeriesPoly integrand = hyperbolic * (holonomy * tangent);

  MatrixSeries averaged = even_part_in_t(average_poly(integrand, GaussianWeight(model.data.beta)), k_max);

  const Scalar shift = model.scalar_R * Scalar::fraction(1, 8) + model.R_H * Scalar::fraction(1, 6);
  const Matrix exponent = sub(Matrix::scalar(dim, shift), rep.casimir);
  const MatrixSeries prefactor = matrix_exp_series(exponent, k_max);
  const TruncSeries twist = det_sinhc_numeric(rep.B, Rational(-1, 2), k_max);

  const MatrixSeries total = MatrixSeries::from_scalar(twist, dim) * (prefactor * averaged);

  HeatCoefficients out;
  out.n = n;
  out.dim = dim;
  out.a.assign(total.coeffs().begin(), total.coeffs().begin() + static_cast<std::ptrdiff_t>(k_max + 1));
  return out;
}

Volume sphere_volume(std::size_t n, const Rational& radius) {
  if (n == 0) throw std::invalid_argument("sphere dimension must be positive");
  if (sgn(radius) <= 0) throw std::invalid_argument("sphere radius must be positive");
  // Odd n: 2π^m/(m−1)! with m = (n+1)/2. Even n: 2^{n+1} π^{n/2} (n/2)! / n!.
  Volume v;
  mpz_class num = 2;
  mpz_class den = 1;
  if (n % 2 == 1) {
    const std::size_t m = (n + 1) / 2;
    for (std::size_t j = 2; j < m; ++j) den *= static_cast<unsigned long>(j);
    v.pi_power = static_cast<int>(m);
  } else {
    const std::size_t m = n / 2;
    num = 1;
    for (std::size_t j = 0; j <= n; ++j) num *= 2;
    for (std::size_t j = 2; j <= m; ++j) num *= static_cast<unsigned long>(j);
    for (std::size_t j = 2; j <= n; ++j) den *= static_cast<unsigned long>(j);
    v.pi_power = static_cast<int>(m);
  }
  Rational r_power = 1;
  for (std::size_t j = 0; j < n; ++j) r_power *= radius;
  v.coefficient = Rational(num, den) * r_power;
  v.coefficient.canonicalize();
  return v;
}

HeatTrace heat_trace(const HeatCoefficients& coeffs, const Volume& volume) {
  if (sgn(volume.coefficient) <= 0) throw std::invalid_argument("volume must be positive");
  HeatTrace out;
  out.volume = volume;
  out.A.reserve(coeffs.a.size());
  for (const auto& a : coeffs.a) out.A.push_back(Scalar(volume.coefficient) * trace(a));
  return out;
}

}  // namespace hk
