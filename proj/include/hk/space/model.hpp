#pragma once

#include "hk/exact/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hk {

/// Curvature datum of a symmetric space: R_abcd = β_ik E^i_ab E^k_cd.
/// Flat directions, if any, are the first flat_dim frame indices.
struct CurvatureData {
  std::size_t n = 0;
  std::size_t flat_dim = 0;
  std::vector<Matrix> E;  // p antisymmetric n×n matrices
  Matrix beta;            // p×p symmetric, invertible, real

  std::size_t p() const { return E.size(); }
};

/// Fully symmetric four-index table R_abcd with frame indices lowered.
class RiemannTensor {
 public:
  RiemannTensor() = default;
  explicit RiemannTensor(std::size_t n) : n_(n), data_(n * n * n * n) {}

  std::size_t dim() const { return n_; }
  const Scalar& operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    return data_[((a * n_ + b) * n_ + c) * n_ + d];
  }
  Scalar& at(std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    return data_[((a * n_ + b) * n_ + c) * n_ + d];
  }
  friend bool operator==(const RiemannTensor&, const RiemannTensor&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Scalar> data_;
};

/// Algebraic model of a symmetric space derived from CurvatureData.
///
/// Index conventions: D[i](a, b) = D^a_ib; F[i](j, k) = F^j_ik; capital
/// indices A = (a, i) run over the n tangent directions first, then the p
/// holonomy directions, and C[A](B, C) = C^B_AC.
struct SymmetricSpaceModel {
  CurvatureData data;
  Matrix beta_inv;
  std::vector<Matrix> D;
  std::vector<Matrix> F;
  std::vector<Matrix> C;
  Matrix gamma;
  Matrix gamma_inv;
  RiemannTensor riemann;
  Matrix ricci;
  Scalar scalar_R;
  /// Scalar curvature of the curvature group.
  Scalar R_G;
  /// Scalar curvature of the holonomy group.
  Scalar R_H;
  Matrix h;  // projector onto the curved directions
  Matrix q;  // projector onto the flat directions

  std::size_t n() const { return data.n; }
  std::size_t p() const { return data.p(); }
  std::size_t N() const { return data.n + data.p(); }
  std::size_t flat_dim() const { return data.flat_dim; }
};

/// Builds every derived object from the curvature datum. F is obtained by
/// solving [D_i, D_k] = F^j_ik D_j exactly. Throws ModelError on malformed
/// shapes, singular β, linearly dependent D_i, or a bracket that leaves the
/// span of the D_j; index-pair errors name the offending pair.
SymmetricSpaceModel build_model(CurvatureData data);

/// Pieces of build_model exposed so validation can recompute them independently.
std::vector<Matrix> holonomy_generators(const CurvatureData& data);
RiemannTensor riemann_from_data(const CurvatureData& data);
std::vector<Matrix> assemble_adjoint(const CurvatureData& data, const std::vector<Matrix>& D,
                                     const std::vector<Matrix>& F);
/// −(1/4) Σ metric_inv^{AB} tr(gen_A gen_B).
Scalar killing_scalar(const Matrix& metric_inv, const std::vector<Matrix>& generators);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult* find(const std::string& name) const;
};

/// Runs every exact consistency check on a model in a fixed order. Failures
/// are report entries; nothing throws for a corrupted model of valid shape.
ValidationReport validate_model(const SymmetricSpaceModel& model);

}  // namespace hk
