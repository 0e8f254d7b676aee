#include "hk/group/residuals.hpp"

#include "hk/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>

namespace hk {

namespace {

using Field = std::function<std::complex<double>(const GroupPoint&)>;

constexpr double kDisagreementLimit = 1e-3;

void check_step(double h) {
  if (!(h >= 1e-4 && h <= 1e-2)) throw std::invalid_argument("finite-difference step must lie in [1e-4, 1e-2]");
}

Eigen::VectorXd field_column(const CurvatureGroup& group, const GroupPoint& k, Eigen::Index A) {
  return group.Y_of(k).inverse().col(A);
}

/// (f(k + h v) − f(k − h v)) / 2h with v = X_A(k).
std::complex<double> along(const CurvatureGroup& group, const Field& f, const GroupPoint& k, Eigen::Index A,
                           double h) {
  const Eigen::VectorXd v = field_column(group, k, A);
  return (f(k + h * v) - f(k - h * v)) / (2.0 * h);
}

/// γ^{AB} V_A V_B f where V_A g = X_A g − ½(𝓑k)_A g.
std::complex<double> casimir(const CurvatureGroup& group, const Field& f, const GroupPoint& k, double h) {
  const Eigen::Index N = static_cast<Eigen::Index>(group.N());
  const Eigen::MatrixXcd& twist = group.twist();
  auto shift = [&](const GroupPoint& x, Eigen::Index A) {
    return 0.5 * (twist.row(A) * x.cast<std::complex<double>>())(0);
  };
  std::complex<double> total = 0;
  for (Eigen::Index B = 0; B < N; ++B) {
    const Field g = [&, B](const GroupPoint& x) { return along(group, f, x, B, h) - shift(x, B) * f(x); };
    for (Eigen::Index A = 0; A < N; ++A) {
      const double w = group.gamma_inv()(A, B);
      if (w == 0.0) continue;
      total += w * (along(group, g, k, A, h) - shift(k, A) * g(k));
    }
  }
  return total;
}

double richardson(const std::function<std::complex<double>(double)>& estimate, double h, double reference_scale) {
  const std::complex<double> coarse = estimate(h);
  const std::complex<double> fine = estimate(h / 2);
  if (!std::isfinite(std::abs(coarse)) || !std::isfinite(std::abs(fine)) ||
      std::abs(coarse - fine) > kDisagreementLimit * std::max(1.0, reference_scale)) {
    throw StepTooSmall("finite-difference estimates at h and h/2 disagree; choose a different step");
  }
  return std::abs((4.0 * fine - coarse) / 3.0);
}

template <typename Sample, typename Body>
double max_over(const std::vector<Sample>& samples, Body body) {
  std::vector<double> per_sample(samples.size(), 0.0);
  parallel_chunks(samples.size(), [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t j = begin; j < end; ++j) per_sample[j] = body(samples[j]);
  });
  double worst = 0;
  for (double r : per_sample) worst = std::max(worst, r);
  return worst;
}

}  // namespace

double laplace_identity_residual(const CurvatureGroup& group, const std::vector<GroupPoint>& samples, double h) {
  check_step(h);
  const Field root = [&](const GroupPoint& x) -> std::complex<double> { return 1.0 / std::sqrt(group.sinhc_det(x)); };
  const double target = group.R_G() / 6.0;
  // The twist drops out of this identity, so use plain X_A.
  const CurvatureGroup& g = group;
  return max_over(samples, [&](const GroupPoint& k) {
    g.check_point(k);
    const std::complex<double> f0 = root(k);
    return richardson(
        [&](double step) {
          std::complex<double> total = 0;
          const Eigen::Index N = static_cast<Eigen::Index>(g.N());
          for (Eigen::Index B = 0; B < N; ++B) {
            const Field d = [&, B](const GroupPoint& x) { return along(g, root, x, B, step); };
            for (Eigen::Index A = 0; A < N; ++A) {
              const double w = g.gamma_inv()(A, B);
              if (w != 0.0) total += w * along(g, d, k, A, step);
            }
          }
          return total / f0 - target;
        },
        h, std::abs(target));
  });
}

double heat_equation_residual(const CurvatureGroup& group, const std::vector<HeatSample>& samples, double h) {
  check_step(h);
  return max_over(samples, [&](const HeatSample& s) {
    group.check_point(s.k);
    if (s.t == 0.0) throw std::invalid_argument("t must be non-zero");
    const std::complex<double> phi0 = group.phi(s.k, s.t);
    const double dt = h * std::abs(s.t);
    auto time_derivative = [&](double step) {
      return (group.phi(s.k, s.t + step) - group.phi(s.k, s.t - step)) / (2.0 * step);
    };
    const std::complex<double> phi_t = (4.0 * time_derivative(dt / 2) - time_derivative(dt)) / 3.0;
    const Field at_t = [&](const GroupPoint& x) { return group.phi(x, s.t); };
    return richardson(
        [&](double step) { return (phi_t - casimir(group, at_t, s.k, step)) / phi0; }, h,
        std::abs(phi_t / phi0));
  });
}

double maurer_cartan_residual(const CurvatureGroup& group, const std::vector<GroupPoint>& samples, double h) {
  const Eigen::Index N = static_cast<Eigen::Index>(group.N());
  return max_over(samples, [&](const GroupPoint& k) {
    group.check_point(k);
    std::vector<Eigen::MatrixXd> dY(static_cast<std::size_t>(N));
    for (Eigen::Index L = 0; L < N; ++L) {
      GroupPoint e = GroupPoint::Zero(N);
      e(L) = h;
      dY[static_cast<std::size_t>(L)] = (group.Y_of(k + e) - group.Y_of(k - e)) / (2.0 * h);
    }
    const Eigen::MatrixXd Y = group.Y_of(k);
    double worst = 0;
    for (Eigen::Index A = 0; A < N; ++A) {
      for (Eigen::Index L = 0; L < N; ++L) {
        for (Eigen::Index M = 0; M < N; ++M) {
          double rhs = 0;
          for (Eigen::Index B = 0; B < N; ++B) {
            for (Eigen::Index C = 0; C < N; ++C) {
              rhs += group.structure()[static_cast<std::size_t>(B)](A, C) * Y(B, L) * Y(C, M);
            }
          }
          const double lhs = dY[static_cast<std::size_t>(L)](A, M) - dY[static_cast<std::size_t>(M)](A, L);
          worst = std::max(worst, std::abs(lhs + rhs));
        }
      }
    }
    return worst;
  });
}

double fixed_point_residual(const CurvatureGroup& group, const std::vector<GroupPoint>& samples) {
  return max_over(samples, [&](const GroupPoint& k) {
    group.check_point(k);
    return (group.Y_of(k) * k - k).cwiseAbs().maxCoeff();
  });
}

nlohmann::ordered_json to_json(const ResidualReport& report) {
  nlohmann::ordered_json out;
  out["check"] = report.check;
  out["samples"] = report.samples;
  out["max_residual"] = report.max_residual;
  out["tolerance"] = report.tolerance;
  out["pass"] = report.pass();
  return out;
}

}  // namespace hk
