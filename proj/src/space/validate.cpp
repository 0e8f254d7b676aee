#include "hk/space/model.hpp"

#include "hk/errors.hpp"

#include <functional>
#include <sstream>
#include <string>

namespace hk {

namespace {

using Check = std::function<std::string(const SymmetricSpaceModel&)>;

std::string idx(std::initializer_list<std::size_t> indices) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (auto i : indices) {
    os << (first ? "" : ",") << i + 1;
    first = false;
  }
  os << ")";
  return os.str();
}

std::string structure(const SymmetricSpaceModel& m) {
  const auto& d = m.data;
  for (std::size_t i = 0; i < d.p(); ++i) {
    if (!d.E[i].is_antisymmetric()) return "E^" + std::to_string(i + 1) + " is not antisymmetric";
  }
  if (!d.beta.is_symmetric()) return "beta is not symmetric";
  if (!d.beta.is_real()) return "beta is not real";
  if (mat_mul(d.beta, m.beta_inv) != Matrix::identity(d.p())) return "beta_inv is not the inverse of beta";
  return {};
}

std::string flat_support(const SymmetricSpaceModel& m) {
  const auto& d = m.data;
  for (std::size_t i = 0; i < d.p(); ++i) {
    for (std::size_t a = 0; a < d.flat_dim; ++a) {
      for (std::size_t b = 0; b < d.n; ++b) {
        if (!d.E[i](a, b).is_zero() || !d.E[i](b, a).is_zero()) {
          return "E^" + std::to_string(i + 1) + " touches flat direction " + std::to_string(a + 1);
        }
      }
    }
  }
  return {};
}

std::string holonomy_generators_ok(const SymmetricSpaceModel& m) {
  const auto expected = holonomy_generators(m.data);
  if (expected.size() != m.D.size()) return "wrong number of D_i";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (expected[i] != m.D[i]) return "D_" + std::to_string(i + 1) + " differs from -beta_ik E^k";
    if (!trace(m.D[i]).is_zero()) return "D_" + std::to_string(i + 1) + " is not traceless";
  }
  return {};
}

std::string riemann_consistent(const SymmetricSpaceModel& m) {
  if (riemann_from_data(m.data) != m.riemann) return "R_abcd differs from beta_ik E^i_ab E^k_cd";
  const std::size_t n = m.n();
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t d = 0; d < n; ++d) {
      Scalar sum;
      for (std::size_t a = 0; a < n; ++a) sum += m.riemann(a, b, a, d);
      if (sum != m.ricci(b, d)) return "Ricci entry " + idx({b, d}) + " is not the contraction of R_abcd";
    }
  }
  if (n > 0 && trace(m.ricci) != m.scalar_R) return "scalar curvature is not the trace of Ricci";
  return {};
}

// R^fg_ea R^e_bcd - R^fg_eb R^e_acd + R^fg_ec R^e_dab - R^fg_ed R^e_cab = 0
std::string curvature_integrability(const SymmetricSpaceModel& m) {
  const std::size_t n = m.n();
  const auto& R = m.riemann;
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t d = 0; d < n; ++d) {
              Scalar sum;
              for (std::size_t e = 0; e < n; ++e) {
                sum += R(f, g, e, a) * R(e, b, c, d);
                sum -= R(f, g, e, b) * R(e, a, c, d);
                sum += R(f, g, e, c) * R(e, d, a, b);
                sum -= R(f, g, e, d) * R(e, c, a, b);
              }
              if (!sum.is_zero()) return "violated at (f,g,a,b,c,d) = " + idx({f, g, a, b, c, d});
            }
          }
        }
      }
    }
  }
  return {};
}

// [D_i, D_k] = F^j_ik D_j and [F_i, F_k] = F^j_ik F_j
std::string holonomy_bracket(const SymmetricSpaceModel& m) {
  const std::size_t p = m.p();
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t k = 0; k < p; ++k) {
      std::vector<Scalar> coeffs(p);
      for (std::size_t j = 0; j < p; ++j) coeffs[j] = m.F[i](j, k);
      if (commutator(m.D[i], m.D[k]) != linear_combination(coeffs, m.D)) {
        return "[D_i, D_k] residual at (i,k) = " + idx({i, k});
      }
      if (commutator(m.F[i], m.F[k]) != linear_combination(coeffs, m.F)) {
        return "[F_i, F_k] residual at (i,k) = " + idx({i, k});
      }
    }
  }
  return {};
}

// E^i_ac D^c_kb - E^i_bc D^c_ka = F^i_kj E^j_ab
std::string curvature_holonomy_compatibility(const SymmetricSpaceModel& m) {
  const std::size_t p = m.p();
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t k = 0; k < p; ++k) {
      const Matrix ed = mat_mul(m.data.E[i], m.D[k]);
      const Matrix lhs = sub(ed, transpose(ed));
      std::vector<Scalar> coeffs(p);
      for (std::size_t j = 0; j < p; ++j) coeffs[j] = m.F[k](i, j);
      const Matrix rhs = linear_combination(coeffs, m.data.E);
      if (lhs != rhs) return "violated at (i,k) = " + idx({i, k});
    }
  }
  return {};
}

// beta_ik F^k_jl + beta_lk F^k_ji = 0
std::string beta_invariance(const SymmetricSpaceModel& m) {
  for (std::size_t j = 0; j < m.p(); ++j) {
    const Matrix bf = mat_mul(m.data.beta, m.F[j]);
    if (!add(bf, transpose(bf)).is_zero()) return "violated for F_" + std::to_string(j + 1);
  }
  return {};
}

std::string structure_constant_assembly(const SymmetricSpaceModel& m) {
  const auto expected = assemble_adjoint(m.data, m.D, m.F);
  if (expected.size() != m.C.size()) return "wrong number of C_A";
  for (std::size_t A = 0; A < expected.size(); ++A) {
    if (expected[A] != m.C[A]) return "C_" + std::to_string(A + 1) + " differs from the (E, D, F) assembly";
  }
  const std::size_t n = m.n();
  for (std::size_t A = 0; A < m.N(); ++A) {
    for (std::size_t B = 0; B < m.N(); ++B) {
      Scalar g = (A < n || B < n) ? Scalar(A == B ? 1 : 0) : m.data.beta(A - n, B - n);
      Scalar gi = (A < n || B < n) ? Scalar(A == B ? 1 : 0) : m.beta_inv(A - n, B - n);
      if (m.gamma(A, B) != g || m.gamma_inv(A, B) != gi) return "gamma differs from diag(delta, beta)";
    }
  }
  return {};
}

// [C_A, C_B] = C^C_AB C_C
std::string adjoint_closure(const SymmetricSpaceModel& m) {
  const std::size_t N = m.N();
  for (std::size_t A = 0; A < N; ++A) {
    for (std::size_t B = 0; B < N; ++B) {
      std::vector<Scalar> coeffs(N);
      for (std::size_t C = 0; C < N; ++C) coeffs[C] = m.C[A](C, B);
      if (commutator(m.C[A], m.C[B]) != linear_combination(coeffs, m.C)) {
        return "violated at (A,B) = " + idx({A, B});
      }
    }
  }
  return {};
}

// gamma_AB C^B_CD + gamma_DB C^B_CA = 0
std::string gamma_invariance(const SymmetricSpaceModel& m) {
  for (std::size_t c = 0; c < m.N(); ++c) {
    const Matrix gc = mat_mul(m.gamma, m.C[c]);
    if (!add(gc, transpose(gc)).is_zero()) return "violated for C_" + std::to_string(c + 1);
  }
  return {};
}

std::string flat_projector_annihilation(const SymmetricSpaceModel& m) {
  const std::size_t n = m.n();
  Matrix expected_q(n, n);
  for (std::size_t a = 0; a < m.flat_dim(); ++a) expected_q.at(a, a) = Scalar(1);
  if (m.q != expected_q || add(m.h, m.q) != Matrix::identity(n)) return "h/q are not the curved/flat projectors";
  for (std::size_t e = 0; e < n; ++e) {
    if (m.q(e, e).is_zero()) continue;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (!m.riemann(e, x, y, z).is_zero()) return "R_abcd q^a_e != 0 for e = " + std::to_string(e + 1);
        }
      }
      if (!m.ricci(e, x).is_zero()) return "R_ab q^a_e != 0 for e = " + std::to_string(e + 1);
    }
    for (std::size_t i = 0; i < m.p(); ++i) {
      for (std::size_t x = 0; x < n; ++x) {
        if (!m.data.E[i](e, x).is_zero()) return "E^i_ab q^a_e != 0 for e = " + std::to_string(e + 1);
        if (!m.D[i](x, e).is_zero() || !m.D[i](e, x).is_zero()) {
          return "D_i does not annihilate flat direction " + std::to_string(e + 1);
        }
      }
    }
  }
  return {};
}

std::string group_scalars(const SymmetricSpaceModel& m) {
  if (killing_scalar(m.gamma_inv, m.C) != m.R_G) return "R_G differs from -1/4 gamma^AB tr(C_A C_B)";
  if (killing_scalar(m.beta_inv, m.F) != m.R_H) return "R_H differs from -1/4 beta^ik tr(F_i F_k)";
  return {};
}

}  // namespace

ValidationReport validate_model(const SymmetricSpaceModel& model) {
  static const std::vector<std::pair<std::string, Check>> checks = {
      {"generator_structure", structure},
      {"flat_support", flat_support},
      {"holonomy_generators", holonomy_generators_ok},
      {"riemann_reconstruction", riemann_consistent},
      {"curvature_integrability", curvature_integrability},
      {"holonomy_bracket", holonomy_bracket},
      {"curvature_holonomy_compatibility", curvature_holonomy_compatibility},
      {"beta_invariance", beta_invariance},
      {"structure_constant_assembly", structure_constant_assembly},
      {"adjoint_closure", adjoint_closure},
      {"gamma_invariance", gamma_invariance},
      {"flat_projector_annihilation", flat_projector_annihilation},
      {"group_scalars", group_scalars},
  };
  ValidationReport report;
  for (const auto& [name, check] : checks) {
    CheckResult result{name, false, {}};
    try {
      result.detail = check(model);
      result.passed = result.detail.empty();
    } catch (const std::exception& e) {
      result.detail = std::string("malformed model: ") + e.what();
    }
    report.checks.push_back(std::move(result));
  }
  return report;
}

}  // namespace hk
