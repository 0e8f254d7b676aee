#include "hk/space/model.hpp"

#include "hk/errors.hpp"
#include "hk/exact/solve.hpp"

#include <stdexcept>
#include <string>

namespace hk {

namespace {

std::vector<Scalar> flatten(const Matrix& m) { return {m.entries().begin(), m.entries().end()}; }

void check_shapes(const CurvatureData& data) {
  const std::size_t p = data.p();
  if (data.flat_dim > data.n) throw ModelError("flat_dim exceeds the dimension n");
  if (p > data.n * (data.n - (data.n > 0 ? 1 : 0)) / 2) {
    throw ModelError("holonomy dimension p = " + std::to_string(p) + " exceeds n(n-1)/2");
  }
  for (std::size_t i = 0; i < p; ++i) {
    if (data.E[i].rows() != data.n || data.E[i].cols() != data.n) {
      throw ModelError("E^" + std::to_string(i + 1) + " is not n x n");
    }
    if (!data.E[i].is_antisymmetric()) throw ModelError("E^" + std::to_string(i + 1) + " is not antisymmetric");
  }
  if (data.beta.rows() != p || data.beta.cols() != p) throw ModelError("beta is not p x p");
  if (!data.beta.is_real()) throw ModelError("beta must have real rational entries");
}

}  // namespace

std::vector<Matrix> holonomy_generators(const CurvatureData& data) {
  std::vector<Matrix> D;
  D.reserve(data.p());
  for (std::size_t i = 0; i < data.p(); ++i) {
    std::vector<Scalar> weights(data.p());
    for (std::size_t k = 0; k < data.p(); ++k) weights[k] = -data.beta(i, k);
    D.push_back(linear_combination(weights, data.E));
  }
  return D;
}

RiemannTensor riemann_from_data(const CurvatureData& data) {
  const std::size_t n = data.n;
  RiemannTensor riemann(n);
  for (std::size_t i = 0; i < data.p(); ++i) {
    for (std::size_t k = 0; k < data.p(); ++k) {
      const Scalar& b = data.beta(i, k);
      if (b.is_zero()) continue;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t bb = 0; bb < n; ++bb) {
          const Scalar& left = data.E[i](a, bb);
          if (left.is_zero()) continue;
          const Scalar weighted = b * left;
          for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t d = 0; d < n; ++d) {
              const Scalar& right = data.E[k](c, d);
              if (!right.is_zero()) riemann.at(a, bb, c, d) += weighted * right;
            }
          }
        }
      }
    }
  }
  return riemann;
}

std::vector<Matrix> assemble_adjoint(const CurvatureData& data, const std::vector<Matrix>& D,
                                     const std::vector<Matrix>& F) {
  const std::size_t n = data.n;
  const std::size_t p = data.p();
  const std::size_t N = n + p;
  std::vector<Matrix> C(N, Matrix(N, N));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < p; ++i) {
        // C^i_ab = E^i_ab
        C[a].at(n + i, b) = data.E[i](a, b);
        // C^a_ib = D^a_ib, C^a_bi = -D^a_ib
        C[n + i].at(a, b) = D[i](a, b);
        C[b].at(a, n + i) = -D[i](a, b);
      }
    }
  }
  for (std::size_t k = 0; k < p; ++k) {
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t l = 0; l < p; ++l) C[n + k].at(n + i, n + l) = F[k](i, l);
    }
  }
  return C;
}

Scalar killing_scalar(const Matrix& metric_inv, const std::vector<Matrix>& generators) {
  Scalar sum;
  for (std::size_t A = 0; A < generators.size(); ++A) {
    for (std::size_t B = 0; B < generators.size(); ++B) {
      if (metric_inv(A, B).is_zero()) continue;
      sum += metric_inv(A, B) * trace_of_product(generators[A], generators[B]);
    }
  }
  return Scalar::fraction(-1, 4) * sum;
}

SymmetricSpaceModel build_model(CurvatureData data) {
  check_shapes(data);
  const std::size_t n = data.n;
  const std::size_t p = data.p();

  SymmetricSpaceModel model;
  try {
    model.beta_inv = inverse(data.beta);
  } catch (const std::domain_error&) {
    throw ModelError("beta is singular");
  }
  model.D = holonomy_generators(data);

  // Columns of the system are the vectorized D_j.
  Matrix system(n * n, p);
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t e = 0; e < n * n; ++e) system.at(e, j) = model.D[j].entries()[e];
  }
  model.F.assign(p, Matrix(p, p));
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t k = 0; k < p; ++k) {
      const SolveResult solved = solve_exact(system, flatten(commutator(model.D[i], model.D[k])));
      const std::string pair = " for (i, k) = (" + std::to_string(i + 1) + ", " + std::to_string(k + 1) + ")";
      if (solved.status == SolveStatus::non_unique) {
        throw ModelError("holonomy generators D_i are linearly dependent; structure constants not unique" + pair);
      }
      if (solved.status == SolveStatus::inconsistent) {
        throw ModelError("[D_i, D_k] is not in the span of the D_j" + pair);
      }
      for (std::size_t j = 0; j < p; ++j) model.F[i].at(j, k) = solved.x[j];
    }
  }

  model.C = assemble_adjoint(data, model.D, model.F);
  const std::size_t N = n + p;
  model.gamma = Matrix(N, N);
  model.gamma_inv = Matrix(N, N);
  for (std::size_t a = 0; a < n; ++a) {
    model.gamma.at(a, a) = Scalar(1);
    model.gamma_inv.at(a, a) = Scalar(1);
  }
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t k = 0; k < p; ++k) {
      model.gamma.at(n + i, n + k) = data.beta(i, k);
      model.gamma_inv.at(n + i, n + k) = model.beta_inv(i, k);
    }
  }

  model.riemann = riemann_from_data(data);
  model.ricci = Matrix(n, n);
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t d = 0; d < n; ++d) {
      Scalar sum;
      for (std::size_t a = 0; a < n; ++a) sum += model.riemann(a, b, a, d);
      model.ricci.at(b, d) = sum;
    }
  }
  model.scalar_R = n > 0 ? trace(model.ricci) : Scalar();
  model.R_G = killing_scalar(model.gamma_inv, model.C);
  model.R_H = killing_scalar(model.beta_inv, model.F);

  model.q = Matrix(n, n);
  model.h = Matrix(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    (a < data.flat_dim ? model.q : model.h).at(a, a) = Scalar(1);
  }
  model.data = std::move(data);
  return model;
}

bool ValidationReport::all_passed() const {
  for (const auto& check : checks) {
    if (!check.passed) return false;
  }
  return true;
}

const CheckResult* ValidationReport::find(const std::string& name) const {
  for (const auto& check : checks) {
    if (check.name == name) return &check;
  }
  return nullptr;
}

}  // namespace hk
