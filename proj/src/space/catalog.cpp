#include "hk/space/catalog.hpp"

#include "hk/errors.hpp"

#include <sstream>

namespace hk {

namespace {

CurvatureData constant_curvature(std::size_t n, const Rational& radius, int sign) {
  if (n < 1) throw ModelError("space dimension must be at least 1");
  if (sgn(radius) <= 0) throw ModelError("radius must be a positive rational");
  CurvatureData data;
  data.n = n;
  data.E = pair_basis(n);
  const Scalar curvature{Rational(sign) / (radius * radius)};
  data.beta = Matrix::scalar(data.E.size(), curvature);
  if (n == 1) data.flat_dim = 1;
  return data;
}

}  // namespace

std::vector<Matrix> pair_basis(std::size_t n) {
  std::vector<Matrix> basis;
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t d = c + 1; d < n; ++d) {
      Matrix e(n, n);
      e.at(c, d) = Scalar(1);
      e.at(d, c) = Scalar(-1);
      basis.push_back(std::move(e));
    }
  }
  return basis;
}

CurvatureData product_data(const std::vector<CurvatureData>& factors) {
  CurvatureData out;
  std::size_t total_p = 0;
  for (const auto& f : factors) {
    out.n += f.n;
    out.flat_dim += f.flat_dim;
    total_p += f.p();
  }
  out.beta = Matrix(total_p, total_p);
  std::size_t flat_offset = 0;
  std::size_t curved_offset = out.flat_dim;
  std::size_t holonomy_offset = 0;
  for (const auto& f : factors) {
    // Global frame index of each local index.
    std::vector<std::size_t> place(f.n);
    for (std::size_t a = 0; a < f.n; ++a) {
      place[a] = a < f.flat_dim ? flat_offset + a : curved_offset + (a - f.flat_dim);
    }
    for (std::size_t i = 0; i < f.p(); ++i) {
      Matrix e(out.n, out.n);
      for (std::size_t a = 0; a < f.n; ++a) {
        for (std::size_t b = 0; b < f.n; ++b) e.at(place[a], place[b]) = f.E[i](a, b);
      }
      out.E.push_back(std::move(e));
      for (std::size_t k = 0; k < f.p(); ++k) out.beta.at(holonomy_offset + i, holonomy_offset + k) = f.beta(i, k);
    }
    flat_offset += f.flat_dim;
    curved_offset += f.n - f.flat_dim;
    holonomy_offset += f.p();
  }
  return out;
}

CurvatureData catalog_data(const SpaceSpec& spec) {
  struct Visitor {
    CurvatureData operator()(const SphereSpec& s) const { return constant_curvature(s.n, s.radius, 1); }
    CurvatureData operator()(const HyperbolicSpec& s) const { return constant_curvature(s.n, s.radius, -1); }
    CurvatureData operator()(const FlatSpec& s) const {
      if (s.n < 1) throw ModelError("flat dimension must be at least 1");
      CurvatureData data;
      data.n = s.n;
      data.flat_dim = s.n;
      return data;
    }
    CurvatureData operator()(const ProductSpec& s) const {
      if (s.factors.empty()) throw ModelError("product needs at least one factor");
      std::vector<CurvatureData> parts;
      for (const auto& f : s.factors) parts.push_back(catalog_data(f));
      return product_data(parts);
    }
  };
  return std::visit(Visitor{}, spec);
}

SymmetricSpaceModel catalog_space(const SpaceSpec& spec) { return build_model(catalog_data(spec)); }

std::string describe(const SpaceSpec& spec) {
  struct Visitor {
    std::string radius_suffix(const Rational& r) const {
      return r == 1 ? std::string() : "(a=" + rational_to_string(r) + ")";
    }
    std::string operator()(const SphereSpec& s) const { return "S" + std::to_string(s.n) + radius_suffix(s.radius); }
    std::string operator()(const HyperbolicSpec& s) const {
      return "H" + std::to_string(s.n) + radius_suffix(s.radius);
    }
    std::string operator()(const FlatSpec& s) const { return "flat(" + std::to_string(s.n) + ")"; }
    std::string operator()(const ProductSpec& s) const {
      std::string out;
      for (std::size_t k = 0; k < s.factors.size(); ++k) out += (k ? "x" : "") + describe(s.factors[k]);
      return out;
    }
  };
  return std::visit(Visitor{}, spec);
}

}  // namespace hk
