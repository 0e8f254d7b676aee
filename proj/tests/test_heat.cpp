#include "doctest.h"
#include "support.hpp"

#include "hk/errors.hpp"
#include "hk/heat/engine.hpp"
#include "hk/heat/report.hpp"
#include "hk/series/pencils.hpp"

using namespace hk;

namespace {

HeatCoefficients coefficients(const SpaceSpec& space, const RepSpec& rep, std::size_t k_max,
                              const std::vector<Rational>& twist = {}) {
  const SymmetricSpaceModel m = catalog_space(space);
  return heat_coefficients(m, catalog_rep(m, rep, twist), k_max);
}

Scalar scalar_a(const HeatCoefficients& c, std::size_t k) { return c.a[k](0, 0); }

}  // namespace

TEST_SUITE("heat") {
  TEST_CASE("unit two-sphere scalar") {
    const HeatCoefficients c = coefficients(SphereSpec{2, Rational(1)}, ScalarRepSpec{}, 2);
    REQUIRE(c.a.size() == 3);
    CHECK(scalar_a(c, 0) == Scalar(1));
    CHECK(scalar_a(c, 1) == Scalar(Rational(1, 3)));
    CHECK(scalar_a(c, 2) == Scalar(Rational(1, 15)));
  }

  TEST_CASE("two-sphere reproduces the product of the prefactor and the averaged determinant") {
    // exp(t/4)·(1 + t/12 + 7t²/480) through t².
    const HeatCoefficients c = coefficients(SphereSpec{2, Rational(1)}, ScalarRepSpec{}, 2);
    const Rational a2 = Rational(1, 32) + Rational(1, 4) * Rational(1, 12) + Rational(7, 480);
    CHECK(scalar_a(c, 2) == Scalar(a2));
  }

  TEST_CASE("unit three-sphere scalar") {
    const HeatCoefficients c = coefficients(SphereSpec{3, Rational(1)}, ScalarRepSpec{}, 3);
    CHECK(scalar_a(c, 1) == Scalar(1));
    CHECK(scalar_a(c, 2) == Scalar(Rational(1, 2)));
    CHECK(scalar_a(c, 3) == Scalar(Rational(1, 6)));
  }

  TEST_CASE("flat space has only a_0") {
    for (std::size_t n = 1; n <= 3; ++n) {
      const HeatCoefficients c = coefficients(FlatSpec{n}, ScalarRepSpec{}, 5);
      CHECK(scalar_a(c, 0) == Scalar(1));
      for (std::size_t k = 1; k <= 5; ++k) CHECK(scalar_a(c, k).is_zero());
    }
  }

  TEST_CASE("a_0 is the identity and a_1 is R/6") {
    for (const auto& space : test::catalog_grid_spaces()) {
      const SymmetricSpaceModel m = catalog_space(space.spec);
      for (const auto& r : test::catalog_grid_reps()) {
        INFO(space.name << " " << r.name);
        const FiberRep rep = catalog_rep(m, r.spec);
        const HeatCoefficients c = heat_coefficients(m, rep, 1);
        CHECK(c.a[0] == Matrix::identity(rep.dim()));
        CHECK(c.a[1] == Matrix::scalar(rep.dim(), m.scalar_R * Scalar::fraction(1, 6)));
      }
    }
  }

  TEST_CASE("radius scaling") {
    // a_k scales as radius^{-2k}.
    const HeatCoefficients unit = coefficients(SphereSpec{3, Rational(1)}, ScalarRepSpec{}, 3);
    const HeatCoefficients big = coefficients(SphereSpec{3, Rational(2)}, ScalarRepSpec{}, 3);
    Rational factor = 1;
    for (std::size_t k = 0; k <= 3; ++k) {
      CHECK(scalar_a(big, k) == scalar_a(unit, k) * Scalar(factor));
      factor /= 4;
    }
  }

  TEST_CASE("truncation stability") {
    const SpaceSpec space = ProductSpec{{SphereSpec{2, Rational(1)}, SphereSpec{2, Rational(1)}}};
    const HeatCoefficients low = coefficients(space, VectorRepSpec{}, 2);
    const HeatCoefficients high = coefficients(space, VectorRepSpec{}, 3);
    for (std::size_t k = 0; k <= 2; ++k) CHECK(low.a[k] == high.a[k]);
  }

  TEST_CASE("pure twist reproduces the twist determinant") {
    const Rational b(3, 2);
    const HeatCoefficients c = coefficients(FlatSpec{2}, ScalarRepSpec{}, 4, {b});
    const TruncSeries ref = det_sinhc_numeric(u1_twist_field(2, 2, {b}), Rational(-1, 2), 4);
    for (std::size_t k = 0; k <= 4; ++k) CHECK(scalar_a(c, k) == ref[k]);
  }

  TEST_CASE("errors") {
    const SymmetricSpaceModel s2 = catalog_space(SphereSpec{2, Rational(1)});
    const SymmetricSpaceModel s3 = catalog_space(SphereSpec{3, Rational(1)});
    const FiberRep rep = catalog_rep(s2, ScalarRepSpec{});
    CHECK_THROWS_AS(heat_coefficients(s2, rep, kMaxSupportedOrder + 1), TruncationOverflow);
    CHECK_THROWS_AS(heat_coefficients(s3, rep, 2), DimensionMismatch);
  }

  TEST_CASE("heat trace") {
    const HeatCoefficients c = coefficients(SphereSpec{2, Rational(1)}, ScalarRepSpec{}, 2);
    const Volume v = sphere_volume(2, Rational(1));
    CHECK(v.coefficient == Rational(4));
    CHECK(v.pi_power == 1);
    const HeatTrace t = heat_trace(c, v);
    CHECK(t.A[0] == Scalar(4));
    CHECK(t.A[1] / Scalar(v.coefficient) == Scalar(Rational(1, 3)));

    const HeatCoefficients spin = coefficients(SphereSpec{2, Rational(1)}, SpinorRepSpec{}, 1);
    const HeatTrace ts = heat_trace(spin, v);
    CHECK(ts.A[1] == Scalar(Rational(2, 3)) * Scalar(v.coefficient));
    CHECK(ts.A[0] == Scalar(2) * Scalar(v.coefficient));

    CHECK_THROWS_AS(heat_trace(c, Volume{Rational(0), 0}), std::invalid_argument);
    CHECK_THROWS_AS(heat_trace(c, Volume{Rational(-1), 1}), std::invalid_argument);
  }

  TEST_CASE("sphere volumes") {
    CHECK(sphere_volume(1, Rational(1)).coefficient == Rational(2));
    CHECK(sphere_volume(3, Rational(1)).coefficient == Rational(2));
    CHECK(sphere_volume(3, Rational(1)).pi_power == 2);
    CHECK(sphere_volume(4, Rational(1)).coefficient == Rational(8, 3));
    CHECK(sphere_volume(4, Rational(1)).pi_power == 2);
    CHECK(sphere_volume(5, Rational(1)).coefficient == Rational(1));
    CHECK(sphere_volume(5, Rational(1)).pi_power == 3);
    CHECK(sphere_volume(2, Rational(3)).coefficient == Rational(36));
  }

  TEST_CASE("report rendering") {
    CHECK(format_scalar(Scalar(Rational(1, 3))) == "1/3 (≈0.333333)");
    const HeatCoefficients c = coefficients(SphereSpec{2, Rational(1)}, ScalarRepSpec{}, 0);
    const auto j = coefficient_json(c, OutputMode::exact);
    CHECK(j.dump() == R"({"n":2,"dimV":1,"a":[{"k":0,"matrix":[["1/1"]]}]})");
    const HeatCoefficients s = coefficients(SphereSpec{2, Rational(1)}, SpinorRepSpec{}, 1);
    const auto js = coefficient_json(s, OutputMode::both);
    CHECK(js["a"][1]["matrix"][0][0]["exact"] == "1/3");
    CHECK(js["a"][1]["matrix"].size() == 2);
    const auto jd = coefficient_json(s, OutputMode::decimal, heat_trace(s, sphere_volume(2, Rational(1))));
    CHECK(jd["trace"]["volume"]["pi_power"] == 1);
    CHECK(jd["trace"]["A"][0]["value"].get<double>() == doctest::Approx(8.0));
    CHECK(parse_output_mode("both") == OutputMode::both);
    CHECK_THROWS_AS(parse_output_mode("fancy"), std::invalid_argument);
    CHECK(coefficient_text(c).find("a_0 = 1/1 (≈1)") != std::string::npos);
  }
}
