#pragma once

#include "hk/group/curvature_group.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace hk {

/// Central-difference step disagreement too large to trust the estimate.
class StepTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kLaplaceTolerance = 1e-5;
inline constexpr double kHeatEquationTolerance = 1e-4;

/// max over samples of |(det X)^{−1/2} γ^{AB} X_A X_B (det X)^{1/2} − R_G/6|,
/// with X_A applied as central differences along the columns of X. The step
/// must lie in [1e−4, 1e−2]; estimates at h and h/2 are combined by
/// Richardson extrapolation and a large disagreement raises StepTooSmall.
double laplace_identity_residual(const CurvatureGroup& group, const std::vector<GroupPoint>& samples,
                                 double h = 1e-3);

struct HeatSample {
  GroupPoint k;
  double t = 0;
};

/// max over samples of |∂_tΦ − J²Φ| / |Φ| with J_A = X_A − ½𝓑_AB k^B.
double heat_equation_residual(const CurvatureGroup& group, const std::vector<HeatSample>& samples,
                              double h = 1e-3);

/// max over samples and index triples of
/// |∂_L Y^A_M − ∂_M Y^A_L + C^A_BC Y^B_L Y^C_M|.
double maurer_cartan_residual(const CurvatureGroup& group, const std::vector<GroupPoint>& samples, double h = 1e-4);

/// max |k^M Y^A_M − k^A| over the samples.
double fixed_point_residual(const CurvatureGroup& group, const std::vector<GroupPoint>& samples);

struct ResidualReport {
  std::string check;
  std::size_t samples = 0;
  double max_residual = 0;
  double tolerance = 0;

  bool pass() const { return max_residual < tolerance; }
};

nlohmann::ordered_json to_json(const ResidualReport& report);

}  // namespace hk
