#include "hk/group/curvature_group.hpp"

#include "hk/errors.hpp"
#include "hk/group/matrix_functions.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace hk {

namespace {

Eigen::MatrixXd to_real(const Matrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).re().get_d();
  }
  return out;
}

}  // namespace

CurvatureGroup::CurvatureGroup(const SymmetricSpaceModel& model, const Matrix& twist, double radius)
    : radius_(radius) {
  const std::size_t N = model.N();
  if (N > kMaxDimension) {
    throw GroupTooLarge("curvature algebra has dimension " + std::to_string(N) + "; group checks support at most " +
                        std::to_string(kMaxDimension) + " (try a lower-dimensional space or a smaller product)");
  }
  if (twist.rows() != model.n() || twist.cols() != model.n()) throw DimensionMismatch("twist must be n x n");
  if (!(radius > 0)) throw std::invalid_argument("radius must be positive");
  gamma_ = to_real(model.gamma);
  gamma_inv_ = to_real(model.gamma_inv);
  for (const auto& c : model.C) C_.push_back(to_real(c));
  R_G_ = model.R_G.re().get_d();
  twist_ = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(N), static_cast<Eigen::Index>(N));
  for (std::size_t a = 0; a < model.n(); ++a) {
    for (std::size_t b = 0; b < model.n(); ++b) twist_(a, b) = twist(a, b).to_complex();
  }
}

void CurvatureGroup::check_point(const GroupPoint& k) const {
  if (static_cast<std::size_t>(k.size()) != N()) throw DimensionMismatch("group point has the wrong dimension");
  if (!k.allFinite()) throw std::invalid_argument("group point has non-finite coordinates");
  if (k.norm() > radius_) throw RadiusExceeded("group point norm exceeds the radius " + std::to_string(radius_));
}

Eigen::MatrixXd CurvatureGroup::C_of(const GroupPoint& k) const {
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(gamma_.rows(), gamma_.cols());
  for (std::size_t A = 0; A < C_.size(); ++A) c += k(static_cast<Eigen::Index>(A)) * C_[A];
  return c;
}

Eigen::MatrixXd CurvatureGroup::Y_of(const GroupPoint& k) const {
  const Eigen::MatrixXcd half = C_of(k).cast<std::complex<double>>() / 2.0;
  return (expm(-half) * sinhc_cosh(half).sinhc).real();
}

double CurvatureGroup::sinhc_det(const GroupPoint& k) const {
  const Eigen::MatrixXcd half = C_of(k).cast<std::complex<double>>() / 2.0;
  return sinhc_cosh(half).sinhc.determinant().real();
}

Eigen::MatrixXcd CurvatureGroup::theta_hat(double t) const {
  const SinhcCosh f = sinhc_cosh(t * twist_);
  return f.cosh * f.sinhc.inverse();
}

std::complex<double> CurvatureGroup::phi(const GroupPoint& k, double t) const {
  const double n = static_cast<double>(N());
  const SinhcCosh tw = sinhc_cosh(t * twist_);
  const Eigen::MatrixXcd th = tw.cosh * tw.sinhc.inverse();
  const std::complex<double> amplitude = std::pow(std::complex<double>(sinhc_det(k)), -0.5) *
                                         std::pow(tw.sinhc.determinant(), -0.5);
  const Eigen::VectorXcd kc = k.cast<std::complex<double>>();
  const std::complex<double> quad = kc.dot(gamma_.cast<std::complex<double>>() * th * kc);
  return std::pow(4.0 * std::numbers::pi * std::abs(t), -n / 2.0) * amplitude *
         std::exp(-quad / (4.0 * t) + R_G_ * t / 6.0);
}

GroupFrame CurvatureGroup::frame_at(const GroupPoint& k, double t) const {
  check_point(k);
  if (t == 0.0 || !std::isfinite(t)) throw std::invalid_argument("t must be finite and non-zero");
  GroupFrame f;
  f.C_of_k = C_of(k);
  f.Y = Y_of(k);
  f.X = f.Y.inverse();
  f.volume = std::sqrt(std::abs(gamma_.determinant())) * sinhc_det(k);
  f.theta_hat = theta_hat(t);
  const Eigen::VectorXcd kc = k.cast<std::complex<double>>();
  f.theta = 0.5 * kc.dot(gamma_.cast<std::complex<double>>() * f.theta_hat * kc);
  f.phi = phi(k, t);
  return f;
}

std::vector<GroupPoint> random_points(std::size_t N, std::size_t count, double radius, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform;
  std::vector<GroupPoint> points;
  points.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    GroupPoint k(static_cast<Eigen::Index>(N));
    for (auto& x : k) x = normal(rng);
    const double r = radius * std::pow(uniform(rng), 1.0 / static_cast<double>(std::max<std::size_t>(N, 1)));
    if (k.norm() > 0) k *= r / k.norm();
    points.push_back(std::move(k));
  }
  return points;
}

}  // namespace hk
