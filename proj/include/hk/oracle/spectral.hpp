#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hk::oracle {

using HighFloat = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<60>,
                                                boost::multiprecision::et_off>;

/// Fit rejected by the condition monitor.
class IllConditioned : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Spectrum of the scalar Laplacian on the round n-sphere of radius a:
/// λ_l = l(l + n − 1)/a², m_l = (2l + n − 1)(l + n − 2)!/(l!(n − 1)!).
struct SpectralModel {
  std::size_t n = 2;
  double radius = 1.0;

  HighFloat eigenvalue(std::size_t l) const;
  HighFloat multiplicity(std::size_t l) const;
  /// 2π^{(n+1)/2} a^n / Γ((n+1)/2).
  HighFloat volume() const;
};

/// Σ_l m_l e^{−tλ_l}, summed until terms drop below 1e−45 of the partial sum
/// past the peak. Throws std::invalid_argument for t ≤ 0 and
/// std::runtime_error when the cutoff is not reached.
HighFloat sphere_trace(const SpectralModel& sm, const HighFloat& t);

struct ExtractionSettings {
  double t_max = 0.02;
  double t_ratio = 50.0;  // t_min = t_max / t_ratio
  std::size_t points = 40;
  double max_condition = 1e40;
};

struct Extraction {
  std::vector<double> approx;
  std::vector<double> error;
};

/// Fits f(t) = (4πt)^{n/2} trace(t) / volume by a degree-(k_max + 2)
/// polynomial on a geometric grid and returns a_0 … a_kmax. The error
/// estimate is the change under halving the grid extent. Requires
/// k_max ≤ 4; throws IllConditioned when the fit is too ill-conditioned.
Extraction extract_coefficients(const SpectralModel& sm, std::size_t k_max, const ExtractionSettings& settings = {});

}  // namespace hk::oracle
