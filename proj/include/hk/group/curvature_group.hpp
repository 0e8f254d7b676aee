#pragma once

#include "hk/space/model.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hk {

/// The group checks are only run on small algebras.
class GroupTooLarge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Point outside the ball where the canonical-coordinate series are trusted.
class RadiusExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Canonical coordinates k^A = (p^a, ω^i) on the curvature group.
using GroupPoint = Eigen::VectorXd;

/// Frame quantities at one point; Y(A, M) = Y^A_M and X(M, A) = X_A^M, so
/// the vector field X_A is column A of X.
struct GroupFrame {
  Eigen::MatrixXd C_of_k;
  Eigen::MatrixXd Y;
  Eigen::MatrixXd X;
  double volume = 0;
  Eigen::MatrixXcd theta_hat;
  std::complex<double> theta;
  std::complex<double> phi;
};

/// Floating-point image of a model's curvature algebra together with an
/// abelian twist 𝓑 on the tangent block.
class CurvatureGroup {
 public:
  static constexpr std::size_t kMaxDimension = 6;

  /// Throws GroupTooLarge when N > kMaxDimension and DimensionMismatch when
  /// the twist is not n×n.
  CurvatureGroup(const SymmetricSpaceModel& model, const Matrix& twist, double radius = 1.0);

  std::size_t N() const { return static_cast<std::size_t>(gamma_.rows()); }
  double radius() const { return radius_; }
  double R_G() const { return R_G_; }
  const Eigen::MatrixXd& gamma() const { return gamma_; }
  const Eigen::MatrixXd& gamma_inv() const { return gamma_inv_; }
  const std::vector<Eigen::MatrixXd>& structure() const { return C_; }
  const Eigen::MatrixXcd& twist() const { return twist_; }

  /// C(k) = k^A C_A.
  Eigen::MatrixXd C_of(const GroupPoint& k) const;
  /// Y = (1 − e^{−C(k)})/C(k) = e^{−C/2}·sinhc(C/2).
  Eigen::MatrixXd Y_of(const GroupPoint& k) const;
  /// det(sinhc(C(k)/2)).
  double sinhc_det(const GroupPoint& k) const;
  /// Φ(t; k) = (4π|t|)^{−N/2}·A(t; k)·exp(−⟨k, γΘ̂k⟩/(4t) + R_G t/6).
  std::complex<double> phi(const GroupPoint& k, double t) const;

  /// Throws RadiusExceeded when ‖k‖ > radius and std::invalid_argument for t = 0.
  GroupFrame frame_at(const GroupPoint& k, double t) const;
  void check_point(const GroupPoint& k) const;

 private:
  Eigen::MatrixXcd theta_hat(double t) const;

  Eigen::MatrixXd gamma_;
  Eigen::MatrixXd gamma_inv_;
  std::vector<Eigen::MatrixXd> C_;
  Eigen::MatrixXcd twist_;
  double R_G_ = 0;
  double radius_ = 1.0;
};

/// count points uniformly distributed in the ball of the given radius;
/// deterministic for a fixed seed.
std::vector<GroupPoint> random_points(std::size_t N, std::size_t count, double radius, std::uint64_t seed);

}  // namespace hk
