#pragma once

#include "hk/space/model.hpp"

#include <variant>
#include <vector>

namespace hk {

/// Table of n×n so(n) generators acting on a fiber; entry (a, b) is G_ab.
class GeneratorTable {
 public:
  GeneratorTable() = default;
  GeneratorTable(std::size_t n, std::size_t dim);

  std::size_t n() const { return n_; }
  std::size_t dim() const { return dim_; }
  const Matrix& operator()(std::size_t a, std::size_t b) const { return table_[a * n_ + b]; }
  /// Sets G_ab and G_ba = −G_ab together.
  void set(std::size_t a, std::size_t b, const Matrix& generator);

 private:
  std::size_t n_ = 0;
  std::size_t dim_ = 0;
  std::vector<Matrix> table_;
};

/// Homogeneous twisted bundle over a model: fiber generators G_ab, an
/// abelian fiber-scalar twist B_ab on the flat factor, and derived holonomy
/// generators R_i = −½ D^a_ib G^b_a, Casimir R² = ¼ R^abcd G_ab G_cd and total
/// curvature Ω_ab = −E^i_ab R_i + B_ab.
struct FiberRep {
  GeneratorTable G;
  Matrix B;  // n×n purely imaginary antisymmetric, flat block only
  std::vector<Matrix> R;
  Matrix casimir;
  std::vector<Matrix> omega;  // n*n table, omega[a*n + b]

  std::size_t dim() const { return G.dim(); }
  std::size_t n() const { return G.n(); }
  const Matrix& Omega(std::size_t a, std::size_t b) const { return omega[a * G.n() + b]; }
  bool twisted() const { return !B.is_zero(); }
};

/// Throws RepError when G violates the so(n) relations, B is not purely
/// imaginary antisymmetric supported on flat directions, the holonomy
/// bracket [R_i, R_k] = F^j_ik R_j fails, or R² does not commute with R_i.
FiberRep build_rep(const SymmetricSpaceModel& model, GeneratorTable G, Matrix B);

/// Same checks as build_rep plus the gauge-curvature integrability
/// [Ω_cd, Ω_ab] − R^f_acd Ω_fb − R^f_bcd Ω_af = 0, as report entries.
ValidationReport validate_rep(const SymmetricSpaceModel& model, const FiberRep& rep);

/// Empty string when the table satisfies
/// [G_ab, G_cd] = δ_bc G_ad − δ_ac G_bd − δ_bd G_ac + δ_ad G_bc.
std::string so_relations_violation(const GeneratorTable& G);

GeneratorTable trivial_generators(std::size_t n);
/// (X_ab)^c_d = δ^c_a δ_bd − δ^c_b δ_ad on an n-dimensional fiber.
GeneratorTable vector_generators(std::size_t n);
/// Hermitian Clifford generators for n ≤ 6 from Kronecker products of Pauli matrices.
std::vector<Matrix> gamma_matrices(std::size_t n);
/// G_ab = ¼[γ_a, γ_b]; fiber dimension 2^⌊n/2⌋.
GeneratorTable spinor_generators(std::size_t n);
/// G_ab = G¹_ab ⊗ I + I ⊗ G²_ab.
GeneratorTable tensor_generators(const GeneratorTable& first, const GeneratorTable& second);
/// B = ⊕_j [[0, i b_j], [−i b_j, 0]] on consecutive flat direction pairs, zero elsewhere.
Matrix u1_twist_field(std::size_t n, std::size_t flat_dim, const std::vector<Rational>& strengths);

struct ScalarRepSpec {};
struct VectorRepSpec {};
struct SpinorRepSpec {};
struct TensorProductSpec;
struct U1TwistSpec {
  std::vector<Rational> strengths;
};
using RepSpec = std::variant<ScalarRepSpec, VectorRepSpec, SpinorRepSpec, TensorProductSpec, U1TwistSpec>;
struct TensorProductSpec {
  std::vector<RepSpec> factors;
};

/// Generators for a catalog fiber; U1TwistSpec has trivial generators.
GeneratorTable catalog_generators(std::size_t n, const RepSpec& spec);

/// Builds a catalog bundle; twist strengths (and a U1TwistSpec) are placed
/// on the flat factor. Throws RepError for spinors with n > 6 or when the
/// twist needs more flat directions than the model has.
FiberRep catalog_rep(const SymmetricSpaceModel& model, const RepSpec& spec,
                     const std::vector<Rational>& twist = {});

std::string describe(const RepSpec& spec);

}  // namespace hk
