#include "hk/group/matrix_functions.hpp"

#include <cmath>

namespace hk {

namespace {

constexpr int kMaxTerms = 60;
constexpr double kTermTolerance = 1e-18;

int scaling_steps(const Eigen::MatrixXcd& A, double target) {
  const double norm = A.cwiseAbs().rowwise().sum().maxCoeff();
  if (!std::isfinite(norm)) throw SeriesDivergence("matrix function argument is not finite");
  int s = 0;
  while (norm / std::ldexp(1.0, s) > target) ++s;
  return s;
}

}  // namespace

SinhcCosh sinhc_cosh(const Eigen::MatrixXcd& A) {
  const auto n = A.rows();
  if (n == 0) return {Eigen::MatrixXcd(0, 0), Eigen::MatrixXcd(0, 0)};
  const int s = scaling_steps(A, 0.25);
  const Eigen::MatrixXcd x = A / std::ldexp(1.0, s);
  const Eigen::MatrixXcd x2 = x * x;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);

  Eigen::MatrixXcd sc = id;
  Eigen::MatrixXcd ch = id;
  Eigen::MatrixXcd power = id;
  bool converged = false;
  for (int m = 1; m < kMaxTerms; ++m) {
    power = power * x2;
    const double f_even = std::tgamma(2.0 * m + 1.0);
    const double f_odd = std::tgamma(2.0 * m + 2.0);
    ch += power / f_even;
    sc += power / f_odd;
    if (power.norm() / f_even < kTermTolerance) {
      converged = true;
      break;
    }
  }
  if (!converged) throw SeriesDivergence("sinhc/cosh Taylor series did not converge");
  for (int j = 0; j < s; ++j) {
    sc = sc * ch;
    ch = 2.0 * ch * ch - id;
  }
  return {sc, ch};
}

Eigen::MatrixXcd expm(const Eigen::MatrixXcd& A) {
  const auto n = A.rows();
  if (n == 0) return Eigen::MatrixXcd(0, 0);
  const int s = scaling_steps(A, 0.5);
  const Eigen::MatrixXcd x = A / std::ldexp(1.0, s);
  Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(n, n);
  Eigen::MatrixXcd term = result;
  bool converged = false;
  for (int m = 1; m < kMaxTerms; ++m) {
    term = term * x / static_cast<double>(m);
    result += term;
    if (term.norm() < kTermTolerance) {
      converged = true;
      break;
    }
  }
  if (!converged) throw SeriesDivergence("exponential Taylor series did not converge");
  for (int j = 0; j < s; ++j) result = result * result;
  return result;
}

}  // namespace hk
