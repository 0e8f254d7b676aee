#include "doctest.h"
#include "support.hpp"

#include "hk/errors.hpp"
#include "hk/heat/engine.hpp"
#include "hk/io/job.hpp"

using namespace hk;

TEST_SUITE("io") {
  TEST_CASE("space names") {
    CHECK(describe(parse_space_name("S2")) == "S2");
    CHECK(describe(parse_space_name("H3")) == "H3");
    CHECK(describe(parse_space_name("flat(2)")) == "flat(2)");
    CHECK(describe(parse_space_name("flat(2)xS2")) == "flat(2)xS2");
    CHECK(catalog_space(parse_space_name("S2xS2")).n() == 4);
    CHECK_THROWS_AS(parse_space_name("T2"), ParseError);
    CHECK_THROWS_AS(parse_space_name("flat(x)"), ParseError);
    CHECK_THROWS_AS(parse_space_name(""), ParseError);
  }

  TEST_CASE("scalars and matrices") {
    CHECK(parse_scalar(nlohmann::json("2/6"), "/x") == Scalar(Rational(1, 3)));
    CHECK(parse_scalar(nlohmann::json(-4), "/x") == Scalar(-4));
    CHECK(parse_scalar(nlohmann::json::parse(R"j({"re": 0, "im": "1/2"})j"), "/x") == Scalar::imaginary(Rational(1, 2)));
    CHECK_THROWS_WITH_AS(parse_scalar(nlohmann::json(0.5), "/x"), doctest::Contains("/x"), ParseError);
    CHECK(parse_matrix(nlohmann::json::parse("[[1, 0], [0, 1]]"), "/m") == Matrix::identity(2));
    CHECK_THROWS_WITH_AS(parse_matrix(nlohmann::json::parse("[[1, 0], [0]]"), "/m"), doctest::Contains("/m"),
                         ParseError);
  }

  TEST_CASE("catalog job") {
    const Job job = parse_job(R"j({"space": "S2", "bundle": "spinor", "k_max": 3, "output": "both"})j");
    CHECK(job.k_max == 3);
    CHECK(job.output == OutputMode::both);
    const SymmetricSpaceModel m = build_space(job);
    CHECK(build_bundle(job, m).dim() == 2);
    const auto v = job_volume(job);
    REQUIRE(v.has_value());
    CHECK(v->coefficient == Rational(4));
    CHECK(v->pi_power == 1);
  }

  TEST_CASE("structured bundles") {
    const Job tensor = parse_job(
        R"j({"space": "S3", "bundle": {"type": "tensor_product", "factors": ["vector", {"type": "spinor"}]}})j");
    const SymmetricSpaceModel m = build_space(tensor);
    CHECK(build_bundle(tensor, m).dim() == 6);
    const Job twisted = parse_job(R"j({"space": "flat(2)", "bundle": {"type": "u1_twist", "blocks": ["1/2"]}})j");
    CHECK(build_bundle(twisted, build_space(twisted)).twisted());
    const Job global_twist = parse_job(R"j({"space": "flat(2)", "twist": {"blocks": ["1/2"]}})j");
    CHECK(build_bundle(global_twist, build_space(global_twist)).twisted());
    CHECK_FALSE(job_volume(global_twist).has_value());
  }

  TEST_CASE("explicit model and generators") {
    const Job job = parse_job(R"j({
      "space": {"type": "explicit", "n": 2, "E": [[[0, 1], [-1, 0]]], "beta": [["1/1"]]},
      "bundle": {"type": "explicit", "dimV": 2,
                 "G": {"1,2": [[{"re": 0, "im": "1/2"}, 0], [0, {"re": 0, "im": "-1/2"}]]}},
      "volume": {"coefficient": "4", "pi_power": 1}})j");
    const SymmetricSpaceModel m = build_space(job);
    const FiberRep rep = build_bundle(job, m);
    const HeatCoefficients c = heat_coefficients(m, rep, 2);
    CHECK(c.a[2] == Matrix::scalar(2, Scalar(Rational(1, 40))));
    REQUIRE(job_volume(job).has_value());
    CHECK(job_volume(job)->coefficient == Rational(4));
  }

  TEST_CASE("schema errors carry a JSON pointer") {
    CHECK_THROWS_WITH_AS(parse_job(R"j({"bundle": "scalar"})j"), doctest::Contains("/space"), ParseError);
    CHECK_THROWS_WITH_AS(parse_job(R"j({"space": "S2", "k_max": "two"})j"), doctest::Contains("/k_max"), ParseError);
    CHECK_THROWS_WITH_AS(parse_job(R"j({"space": "S2", "output": "fancy"})j"), doctest::Contains("/output"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_job(R"j({"space": "S2", "bundle": {"type": "gluon"}})j"),
                         doctest::Contains("/bundle/type"), ParseError);
    CHECK_THROWS_WITH_AS(parse_job(R"j({"space": "flat(2)", "twist": {"blocks": [0.5]}})j"),
                         doctest::Contains("/twist/blocks/0"), ParseError);
    CHECK_THROWS_AS(parse_job("[1, 2]"), ParseError);
  }

  TEST_CASE("syntax errors carry a byte position") {
    CHECK_THROWS_WITH_AS(parse_job(R"j({"space": "S2",, })j"), doctest::Contains("byte"), ParseError);
    CHECK_THROWS_AS(load_job("/nonexistent/job.json"), ParseError);
  }
}
