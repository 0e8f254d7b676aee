#include "hk/bundle/rep.hpp"

#include "hk/errors.hpp"

#include <functional>

namespace hk {

namespace {

std::string pair_name(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
}

Matrix pauli(int which) {
  switch (which) {
    case 1:
      return {{0, 1}, {1, 0}};
    case 2:
      return {{0, -Scalar::i()}, {Scalar::i(), 0}};
    case 3:
      return {{1, 0}, {0, -1}};
    default:
      return Matrix::identity(2);
  }
}

Matrix kron_chain(const std::vector<Matrix>& factors) {
  Matrix out = Matrix::identity(1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

std::string twist_violation(const SymmetricSpaceModel& model, const Matrix& B) {
  const std::size_t n = model.n();
  if (B.rows() != n || B.cols() != n) return "twist B is not n x n";
  if (!B.is_antisymmetric()) return "twist B is not antisymmetric";
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (sgn(B(a, b).re()) != 0) return "twist B entry " + pair_name(a, b) + " is not purely imaginary";
      const bool curved = a >= model.flat_dim() || b >= model.flat_dim();
      if (curved && !B(a, b).is_zero()) return "twist B is supported on curved direction pair " + pair_name(a, b);
    }
  }
  return {};
}

std::string holonomy_bracket_violation(const SymmetricSpaceModel& model, const FiberRep& rep) {
  const std::size_t p = model.p();
  for (std::size_t i = 0; i < p; ++i) {
    for (std::size_t k = 0; k < p; ++k) {
      std::vector<Scalar> coeffs(p);
      for (std::size_t j = 0; j < p; ++j) coeffs[j] = model.F[i](j, k);
      if (commutator(rep.R[i], rep.R[k]) != linear_combination(coeffs, rep.R)) {
        return "[R_i, R_k] != F^j_ik R_j at (i,k) = " + pair_name(i, k);
      }
    }
  }
  return {};
}

std::string casimir_violation(const FiberRep& rep) {
  for (std::size_t i = 0; i < rep.R.size(); ++i) {
    if (!commutator(rep.casimir, rep.R[i]).is_zero()) {
      return "Casimir does not commute with R_" + std::to_string(i + 1);
    }
  }
  return {};
}

// [Ω_cd, Ω_ab] − R^f_acd Ω_fb − R^f_bcd Ω_af = 0
std::string gauge_integrability_violation(const SymmetricSpaceModel& model, const FiberRep& rep) {
  const std::size_t n = model.n();
  const auto& R = model.riemann;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          Matrix lhs = commutator(rep.Omega(c, d), rep.Omega(a, b));
          for (std::size_t f = 0; f < n; ++f) {
            if (!R(f, a, c, d).is_zero()) lhs = sub(lhs, scale(R(f, a, c, d), rep.Omega(f, b)));
            if (!R(f, b, c, d).is_zero()) lhs = sub(lhs, scale(R(f, b, c, d), rep.Omega(a, f)));
          }
          if (!lhs.is_zero()) return "violated at (a,b,c,d) = " + pair_name(a, b) + pair_name(c, d);
        }
      }
    }
  }
  return {};
}

}  // namespace

GeneratorTable::GeneratorTable(std::size_t n, std::size_t dim)
    : n_(n), dim_(dim), table_(n * n, Matrix(dim, dim)) {}

void GeneratorTable::set(std::size_t a, std::size_t b, const Matrix& generator) {
  if (generator.rows() != dim_ || generator.cols() != dim_) throw DimensionMismatch("generator has wrong fiber size");
  table_[a * n_ + b] = generator;
  table_[b * n_ + a] = -generator;
}

std::string so_relations_violation(const GeneratorTable& G) {
  const std::size_t n = G.n();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (G(a, b) != -G(b, a)) return "G is not antisymmetric at " + pair_name(a, b);
    }
  }
  auto delta = [](std::size_t x, std::size_t y) { return x == y; };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = c + 1; d < n; ++d) {
          Matrix rhs(G.dim(), G.dim());
          if (delta(b, c)) rhs = add(rhs, G(a, d));
          if (delta(a, c)) rhs = sub(rhs, G(b, d));
          if (delta(b, d)) rhs = sub(rhs, G(a, c));
          if (delta(a, d)) rhs = add(rhs, G(b, c));
          if (commutator(G(a, b), G(c, d)) != rhs) {
            return "so(n) relation fails for [G" + pair_name(a, b) + ", G" + pair_name(c, d) + "]";
          }
        }
      }
    }
  }
  return {};
}

FiberRep build_rep(const SymmetricSpaceModel& model, GeneratorTable G, Matrix B) {
  const std::size_t n = model.n();
  if (G.n() != n) throw RepError("generator table is for n = " + std::to_string(G.n()) + ", model has n = " + std::to_string(n));
  if (B.rows() == 0 && B.cols() == 0) B = Matrix(n, n);
  if (auto why = so_relations_violation(G); !why.empty()) throw RepError(why);
  if (auto why = twist_violation(model, B); !why.empty()) throw RepError(why);

  FiberRep rep;
  rep.G = std::move(G);
  rep.B = std::move(B);
  const std::size_t dim = rep.G.dim();

  rep.R.reserve(model.p());
  for (std::size_t i = 0; i < model.p(); ++i) {
    Matrix r(dim, dim);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (!model.D[i](a, b).is_zero()) r = add(r, scale(model.D[i](a, b), rep.G(b, a)));
      }
    }
    rep.R.push_back(scale(Scalar::fraction(-1, 2), r));
  }

  Matrix casimir(dim, dim);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Matrix contracted(dim, dim);
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          if (!model.riemann(a, b, c, d).is_zero()) contracted = add(contracted, scale(model.riemann(a, b, c, d), rep.G(c, d)));
        }
      }
      if (!contracted.is_zero()) casimir = add(casimir, mat_mul(rep.G(a, b), contracted));
    }
  }
  rep.casimir = scale(Scalar::fraction(1, 4), casimir);

  rep.omega.assign(n * n, Matrix(dim, dim));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Matrix w = Matrix::scalar(dim, rep.B(a, b));
      for (std::size_t i = 0; i < model.p(); ++i) {
        if (!model.data.E[i](a, b).is_zero()) w = sub(w, scale(model.data.E[i](a, b), rep.R[i]));
      }
      rep.omega[a * n + b] = std::move(w);
    }
  }

  if (auto why = holonomy_bracket_violation(model, rep); !why.empty()) throw RepError(why);
  if (auto why = casimir_violation(rep); !why.empty()) throw RepError(why);
  return rep;
}

ValidationReport validate_rep(const SymmetricSpaceModel& model, const FiberRep& rep) {
  const std::vector<std::pair<std::string, std::function<std::string()>>> checks = {
      {"so_relations", [&] { return so_relations_violation(rep.G); }},
      {"twist_support", [&] { return twist_violation(model, rep.B); }},
      {"rep_holonomy_bracket", [&] { return holonomy_bracket_violation(model, rep); }},
      {"casimir_centrality", [&] { return casimir_violation(rep); }},
      {"gauge_curvature_integrability", [&] { return gauge_integrability_violation(model, rep); }},
  };
  ValidationReport report;
  for (const auto& [name, check] : checks) {
    CheckResult result{name, false, {}};
    try {
      result.detail = check();
      result.passed = result.detail.empty();
    } catch (const std::exception& e) {
      result.detail = std::string("malformed bundle: ") + e.what();
    }
    report.checks.push_back(std::move(result));
  }
  return report;
}

GeneratorTable trivial_generators(std::size_t n) { return GeneratorTable(n, 1); }

GeneratorTable vector_generators(std::size_t n) {
  GeneratorTable G(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      Matrix x(n, n);
      x.at(a, b) = Scalar(1);
      x.at(b, a) = Scalar(-1);
      G.set(a, b, x);
    }
  }
  return G;
}

std::vector<Matrix> gamma_matrices(std::size_t n) {
  if (n > 6) throw RepError("spinor catalog supports n <= 6, got n = " + std::to_string(n));
  const std::size_t m = n / 2;
  std::vector<Matrix> gammas;
  for (std::size_t j = 0; j < m; ++j) {
    for (int which : {1, 2}) {
      std::vector<Matrix> factors(j, pauli(3));
      factors.push_back(pauli(which));
      factors.insert(factors.end(), m - j - 1, Matrix::identity(2));
      gammas.push_back(kron_chain(factors));
    }
  }
  if (n % 2 == 1) gammas.push_back(kron_chain(std::vector<Matrix>(m, pauli(3))));
  return gammas;
}

GeneratorTable spinor_generators(std::size_t n) {
  const auto gammas = gamma_matrices(n);
  const std::size_t dim = std::size_t{1} << (n / 2);
  GeneratorTable G(n, dim);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      G.set(a, b, scale(Scalar::fraction(1, 4), commutator(gammas[a], gammas[b])));
    }
  }
  return G;
}

GeneratorTable tensor_generators(const GeneratorTable& first, const GeneratorTable& second) {
  if (first.n() != second.n()) throw DimensionMismatch("tensor factors act on different tangent dimensions");
  const std::size_t n = first.n();
  GeneratorTable G(n, first.dim() * second.dim());
  const Matrix id1 = Matrix::identity(first.dim());
  const Matrix id2 = Matrix::identity(second.dim());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      G.set(a, b, add(kron(first(a, b), id2), kron(id1, second(a, b))));
    }
  }
  return G;
}

Matrix u1_twist_field(std::size_t n, std::size_t flat_dim, const std::vector<Rational>& strengths) {
  if (2 * strengths.size() > flat_dim) {
    throw RepError("odd flat block: " + std::to_string(strengths.size()) + " twist block(s) need " +
                   std::to_string(2 * strengths.size()) + " flat directions, model has " + std::to_string(flat_dim));
  }
  Matrix B(n, n);
  for (std::size_t j = 0; j < strengths.size(); ++j) {
    B.at(2 * j, 2 * j + 1) = Scalar::imaginary(strengths[j]);
    B.at(2 * j + 1, 2 * j) = Scalar::imaginary(-strengths[j]);
  }
  return B;
}

GeneratorTable catalog_generators(std::size_t n, const RepSpec& spec) {
  struct Visitor {
    std::size_t n;
    GeneratorTable operator()(const ScalarRepSpec&) const { return trivial_generators(n); }
    GeneratorTable operator()(const VectorRepSpec&) const { return vector_generators(n); }
    GeneratorTable operator()(const SpinorRepSpec&) const { return spinor_generators(n); }
    GeneratorTable operator()(const U1TwistSpec&) const { return trivial_generators(n); }
    GeneratorTable operator()(const TensorProductSpec& t) const {
      if (t.factors.empty()) throw RepError("tensor_product needs at least one factor");
      GeneratorTable out = catalog_generators(n, t.factors.front());
      for (std::size_t k = 1; k < t.factors.size(); ++k) out = tensor_generators(out, catalog_generators(n, t.factors[k]));
      return out;
    }
  };
  return std::visit(Visitor{n}, spec);
}

FiberRep catalog_rep(const SymmetricSpaceModel& model, const RepSpec& spec, const std::vector<Rational>& twist) {
  std::vector<Rational> strengths = twist;
  if (const auto* u1 = std::get_if<U1TwistSpec>(&spec)) {
    if (model.flat_dim() < 2) throw RepError("u1_twist requires flat_dim >= 2");
    strengths.insert(strengths.end(), u1->strengths.begin(), u1->strengths.end());
  }
  Matrix B = u1_twist_field(model.n(), model.flat_dim(), strengths);
  return build_rep(model, catalog_generators(model.n(), spec), std::move(B));
}

std::string describe(const RepSpec& spec) {
  struct Visitor {
    std::string operator()(const ScalarRepSpec&) const { return "scalar"; }
    std::string operator()(const VectorRepSpec&) const { return "vector"; }
    std::string operator()(const SpinorRepSpec&) const { return "spinor"; }
    std::string operator()(const U1TwistSpec&) const { return "u1_twist"; }
    std::string operator()(const TensorProductSpec& t) const {
      std::string out = "tensor(";
      for (std::size_t k = 0; k < t.factors.size(); ++k) out += (k ? "," : "") + describe(t.factors[k]);
      return out + ")";
    }
  };
  return std::visit(Visitor{}, spec);
}

}  // namespace hk
