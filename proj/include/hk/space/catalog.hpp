#pragma once

#include "hk/space/model.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace hk {

struct SphereSpec {
  std::size_t n = 2;
  Rational radius{1};
};

struct HyperbolicSpec {
  std::size_t n = 2;
  Rational radius{1};
};

struct FlatSpec {
  std::size_t n = 1;
};

struct ProductSpec;

using SpaceSpec = std::variant<SphereSpec, HyperbolicSpec, FlatSpec, ProductSpec>;

struct ProductSpec {
  std::vector<SpaceSpec> factors;
};

/// E^(cd)_ab = δ^c_a δ^d_b − δ^c_b δ^d_a over pairs c < d, in lexicographic order.
std::vector<Matrix> pair_basis(std::size_t n);

/// Curvature datum for a catalog space. Products put every flat factor first,
/// then the curved factors in the order given. Throws ModelError for invalid
/// parameters (non-positive radius, n < 1).
CurvatureData catalog_data(const SpaceSpec& spec);

/// Block assembly of several curvature data; flat directions first.
CurvatureData product_data(const std::vector<CurvatureData>& factors);

SymmetricSpaceModel catalog_space(const SpaceSpec& spec);

std::string describe(const SpaceSpec& spec);

}  // namespace hk
