#include "hk/oracle/spectral.hpp"

#include "hk/parallel.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <Eigen/Dense>

#include <cmath>
#include <string>

namespace hk::oracle {

namespace {

using MpMatrix = Eigen::Matrix<HighFloat, Eigen::Dynamic, Eigen::Dynamic>;
using MpVector = Eigen::Matrix<HighFloat, Eigen::Dynamic, 1>;

constexpr std::size_t kMaxTerms = 50'000'000;

HighFloat normalized_trace(const SpectralModel& sm, const HighFloat& t) {
  using boost::multiprecision::pow;
  const HighFloat pi = boost::math::constants::pi<HighFloat>();
  return pow(4 * pi * t, HighFloat(sm.n) / 2) * sphere_trace(sm, t) / sm.volume();
}

struct Fit {
  std::vector<HighFloat> coeffs;  // in powers of t
};

Fit fit(const SpectralModel& sm, std::size_t degree, double t_max, const ExtractionSettings& settings) {
  const std::size_t m = settings.points;
  const HighFloat top(t_max);
  const HighFloat ratio = boost::multiprecision::pow(HighFloat(settings.t_ratio), HighFloat(1) / HighFloat(m - 1));

  std::vector<HighFloat> grid(m);
  grid[0] = top;
  for (std::size_t j = 1; j < m; ++j) grid[j] = grid[j - 1] / ratio;
  std::vector<HighFloat> values(m);
  parallel_chunks(m, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) values[j] = normalized_trace(sm, grid[j]);
  });

  const auto rows = static_cast<Eigen::Index>(m);
  const auto cols = static_cast<Eigen::Index>(degree + 1);
  MpMatrix V(rows, cols);
  MpVector y(rows);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const HighFloat u = grid[static_cast<std::size_t>(r)] / top;
    HighFloat power = 1;
    for (Eigen::Index c = 0; c < cols; ++c) {
      V(r, c) = power;
      power *= u;
    }
    y(r) = values[static_cast<std::size_t>(r)];
  }
  const Eigen::ColPivHouseholderQR<MpMatrix> qr(V);
  const auto& R = qr.matrixR();
  HighFloat largest = 0;
  HighFloat smallest = boost::multiprecision::abs(R(0, 0));
  for (Eigen::Index c = 0; c < cols; ++c) {
    const HighFloat d = boost::multiprecision::abs(R(c, c));
    largest = std::max(largest, d);
    smallest = std::min(smallest, d);
  }
  if (smallest == 0 || largest / smallest > HighFloat(settings.max_condition)) {
    throw IllConditioned("least-squares fit is ill-conditioned (condition estimate above " +
                         std::to_string(settings.max_condition) + ")");
  }
  const MpVector c = qr.solve(y);
  Fit out;
  HighFloat scale = 1;
  for (Eigen::Index j = 0; j < cols; ++j) {
    out.coeffs.push_back(c(j) / scale);
    scale *= top;
  }
  return out;
}

}  // namespace

HighFloat SpectralModel::eigenvalue(std::size_t l) const {
  const HighFloat a(radius);
  return HighFloat(l) * HighFloat(l + n - 1) / (a * a);
}

HighFloat SpectralModel::multiplicity(std::size_t l) const {
  HighFloat m(2 * l + n - 1);
  for (std::size_t j = 1; j + 1 < n; ++j) m *= HighFloat(l + j);
  for (std::size_t j = 2; j < n; ++j) m /= HighFloat(j);
  return m;
}

HighFloat SpectralModel::volume() const {
  using boost::multiprecision::pow;
  const HighFloat pi = boost::math::constants::pi<HighFloat>();
  const HighFloat half_dim = HighFloat(n + 1) / 2;
  return 2 * pow(pi, half_dim) / boost::multiprecision::tgamma(half_dim) * pow(HighFloat(radius), HighFloat(n));
}

HighFloat sphere_trace(const SpectralModel& sm, const HighFloat& t) {
  if (!(t > 0)) throw std::invalid_argument("sphere_trace needs t > 0");
  if (sm.n < 2) throw std::invalid_argument("sphere_trace needs n >= 2");
  if (!(sm.radius > 0)) throw std::invalid_argument("sphere radius must be positive");
  const HighFloat cutoff("1e-45");
  HighFloat sum = 0;
  HighFloat previous = 0;
  for (std::size_t l = 0; l < kMaxTerms; ++l) {
    const HighFloat term = sm.multiplicity(l) * boost::multiprecision::exp(-t * sm.eigenvalue(l));
    sum += term;
    if (l > 0 && term < previous && term < cutoff * sum) return sum;
    previous = term;
  }
  throw std::runtime_error("sphere_trace cutoff not reached within " + std::to_string(kMaxTerms) + " terms");
}

Extraction extract_coefficients(const SpectralModel& sm, std::size_t k_max, const ExtractionSettings& settings) {
  if (k_max > 4) throw std::invalid_argument("extract_coefficients supports k_max <= 4");
  if (settings.points < k_max + 4) throw std::invalid_argument("extraction grid has too few points");
  const std::size_t degree = k_max + 2;
  const Fit full = fit(sm, degree, settings.t_max, settings);
  const Fit half = fit(sm, degree, settings.t_max / 2, settings);
  Extraction out;
  for (std::size_t k = 0; k <= k_max; ++k) {
    out.approx.push_back(static_cast<double>(full.coeffs[k]));
    out.error.push_back(static_cast<double>(boost::multiprecision::abs(full.coeffs[k] - half.coeffs[k])));
  }
  return out;
}

}  // namespace hk::oracle
