#include "doctest.h"
#include "support.hpp"

#include "hk/errors.hpp"
#include "hk/space/catalog.hpp"
#include "hk/space/model.hpp"

using namespace hk;

namespace {

std::vector<SpaceSpec> validation_catalog() {
  return {SphereSpec{2, Rational(1)},   SphereSpec{3, Rational(1)},    SphereSpec{4, Rational(2)},
          SphereSpec{5, Rational(1)},   HyperbolicSpec{2, Rational(1)}, HyperbolicSpec{3, Rational(1, 2)},
          HyperbolicSpec{4, Rational(1)}, FlatSpec{1},                  FlatSpec{3},
          ProductSpec{{FlatSpec{2}, SphereSpec{2, Rational(1)}}},
          ProductSpec{{SphereSpec{2, Rational(1)}, SphereSpec{2, Rational(1)}}},
          ProductSpec{{SphereSpec{2, Rational(1)}, HyperbolicSpec{3, Rational(1)}, FlatSpec{1}}}};
}

}  // namespace

TEST_SUITE("space") {
  TEST_CASE("unit two-sphere scalars") {
    const SymmetricSpaceModel m = catalog_space(SphereSpec{2, Rational(1)});
    CHECK(m.n() == 2);
    CHECK(m.p() == 1);
    CHECK(m.scalar_R == Scalar(2));
    CHECK(m.R_H == Scalar(0));
    CHECK(m.R_G == Scalar(Rational(3, 2)));
    CHECK(m.riemann(0, 1, 0, 1) == Scalar(1));
    CHECK(m.riemann(0, 1, 1, 0) == Scalar(-1));
    CHECK(m.ricci == Matrix::identity(2));
  }

  TEST_CASE("sphere curvature scales with the radius and flips for hyperbolic space") {
    for (std::size_t n = 2; n <= 5; ++n) {
      const Rational R = Rational(static_cast<long>(n * (n - 1)));
      CHECK(catalog_space(SphereSpec{n, Rational(1)}).scalar_R == Scalar(R));
      CHECK(catalog_space(SphereSpec{n, Rational(2)}).scalar_R == Scalar(R / 4));
      CHECK(catalog_space(HyperbolicSpec{n, Rational(1)}).scalar_R == Scalar(-R));
    }
  }

  TEST_CASE("constant-curvature Riemann tensor") {
    const SymmetricSpaceModel m = catalog_space(SphereSpec{3, Rational(1)});
    for (std::size_t a = 0; a < 3; ++a) {
      for (std::size_t b = 0; b < 3; ++b) {
        for (std::size_t c = 0; c < 3; ++c) {
          for (std::size_t d = 0; d < 3; ++d) {
            const long expected = (a == c && b == d ? 1 : 0) - (a == d && b == c ? 1 : 0);
            CHECK(m.riemann(a, b, c, d) == Scalar(expected));
          }
        }
      }
    }
    CHECK(m.ricci == scale(Scalar(2), Matrix::identity(3)));
  }

  TEST_CASE("holonomy generators are minus beta times E") {
    const SymmetricSpaceModel m = catalog_space(SphereSpec{3, Rational(1)});
    for (std::size_t i = 0; i < m.p(); ++i) {
      Matrix expected(3, 3);
      for (std::size_t k = 0; k < m.p(); ++k) expected = sub(expected, scale(m.data.beta(i, k), m.data.E[k]));
      CHECK(m.D[i] == expected);
    }
  }

  TEST_CASE("products put flat directions first") {
    const SymmetricSpaceModel m = catalog_space(ProductSpec{{SphereSpec{2, Rational(1)}, FlatSpec{2}}});
    CHECK(m.n() == 4);
    CHECK(m.flat_dim() == 2);
    CHECK(m.scalar_R == Scalar(2));
    CHECK(m.q(0, 0) == Scalar(1));
    CHECK(m.h(2, 2) == Scalar(1));
    CHECK(describe(ProductSpec{{FlatSpec{2}, SphereSpec{2, Rational(1)}}}) == "flat(2)xS2");
  }

  TEST_CASE("every catalog model passes validation") {
    for (const auto& spec : validation_catalog()) {
      const SymmetricSpaceModel m = catalog_space(spec);
      const ValidationReport r = validate_model(m);
      INFO(describe(spec));
      for (const auto& c : r.checks) {
        INFO(c.name << ": " << c.detail);
        CHECK(c.passed);
      }
    }
  }

  TEST_CASE("single-entry corruptions are detected") {
    const SymmetricSpaceModel base = catalog_space(SphereSpec{3, Rational(1)});
    auto bump = [](Matrix& m, std::size_t r, std::size_t c) { m.at(r, c) += Scalar(1); };
    std::vector<std::pair<std::string, SymmetricSpaceModel>> corrupted;
    {
      auto m = base;
      bump(m.data.E[0], 0, 2);
      corrupted.emplace_back("E", m);
    }
    {
      auto m = base;
      bump(m.data.beta, 0, 0);
      corrupted.emplace_back("beta diagonal", m);
    }
    {
      auto m = base;
      bump(m.data.beta, 0, 1);
      corrupted.emplace_back("beta off-diagonal", m);
    }
    {
      auto m = base;
      bump(m.D[1], 0, 1);
      corrupted.emplace_back("D", m);
    }
    {
      auto m = base;
      bump(m.F[0], 1, 2);
      corrupted.emplace_back("F", m);
    }
    {
      auto m = base;
      bump(m.C[4], 0, 1);
      corrupted.emplace_back("C", m);
    }
    {
      auto m = base;
      m.riemann.at(0, 1, 0, 1) += Scalar(1);
      corrupted.emplace_back("Riemann", m);
    }
    {
      auto m = base;
      m.scalar_R += Scalar(1);
      corrupted.emplace_back("R", m);
    }
    for (const auto& [what, model] : corrupted) {
      INFO(what);
      CHECK_FALSE(validate_model(model).all_passed());
    }
  }

  TEST_CASE("non-invariant beta fails the invariance check") {
    CurvatureData d = catalog_data(SphereSpec{3, Rational(1)});
    d.beta = Matrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 3}};
    const ValidationReport r = validate_model(build_model(d));
    REQUIRE(r.find("beta_invariance") != nullptr);
    CHECK_FALSE(r.find("beta_invariance")->passed);
  }

  TEST_CASE("malformed curvature data is rejected") {
    CurvatureData dependent;
    dependent.n = 3;
    const Matrix e = pair_basis(3)[0];
    dependent.E = {e, e};
    dependent.beta = Matrix::identity(2);
    CHECK_THROWS_WITH_AS(build_model(dependent), doctest::Contains("(i, k)"), ModelError);

    CurvatureData singular = catalog_data(SphereSpec{3, Rational(1)});
    singular.beta = Matrix(3, 3);
    CHECK_THROWS_WITH_AS(build_model(singular), doctest::Contains("singular"), ModelError);

    CurvatureData symmetric_E = catalog_data(SphereSpec{2, Rational(1)});
    symmetric_E.E[0] = Matrix{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(build_model(symmetric_E), ModelError);

    CHECK_THROWS_AS(catalog_space(SphereSpec{2, Rational(-1)}), ModelError);
    CHECK_THROWS_AS(catalog_space(FlatSpec{0}), ModelError);
  }

  TEST_CASE("group scalar matches the Killing form expression") {
    const SymmetricSpaceModel m = catalog_space(SphereSpec{3, Rational(1)});
    CHECK(killing_scalar(m.gamma_inv, m.C) == m.R_G);
    CHECK(killing_scalar(m.beta_inv, m.F) == m.R_H);
  }
}
