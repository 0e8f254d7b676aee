#pragma once

#include "hk/bundle/rep.hpp"
#include "hk/space/model.hpp"

#include <vector>

namespace hk {

/// Largest k_max the series engine accepts.
inline constexpr std::size_t kMaxSupportedOrder = 8;

/// Heat kernel diagonal coefficients a_0 … a_kmax relative to (4πt)^{−n/2}.
struct HeatCoefficients {
  std::size_t n = 0;
  std::size_t dim = 0;
  std::vector<Matrix> a;

  std::size_t k_max() const { return a.size() - 1; }
};

/// Expands
///   det(sinhc(tB))^{−1/2} · exp(((R/8 + R_H/6)·I − R²)t)
///   · ⟨cosh(√t R(ω)) det_H(sinhc(√t F(ω)/2))^{1/2} det_TM(sinhc(√t D(ω)/2))^{−1/2}⟩
/// in t and returns the coefficients through t^k_max. Throws
/// TruncationOverflow for k_max > kMaxSupportedOrder and DimensionMismatch
/// when the bundle was not built over this model.
HeatCoefficients heat_coefficients(const SymmetricSpaceModel& model, const FiberRep& rep, std::size_t k_max);

/// Rational multiple of a power of π, used to keep volumes exact.
struct Volume {
  Rational coefficient{1};
  int pi_power = 0;
};

/// Volume 2π^{(n+1)/2} a^n / Γ((n+1)/2) of the n-sphere of radius a.
Volume sphere_volume(std::size_t n, const Rational& radius);

/// A_k = volume · tr a_k, stored as the rational coefficient of π^pi_power.
struct HeatTrace {
  Volume volume;
  std::vector<Scalar> A;
};

/// Throws std::invalid_argument unless the volume coefficient is positive.
HeatTrace heat_trace(const HeatCoefficients& coeffs, const Volume& volume);

}  // namespace hk
