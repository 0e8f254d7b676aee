#include "doctest.h"
#include "support.hpp"

#include "hk/errors.hpp"
#include "hk/parallel.hpp"
#include "hk/series/pencils.hpp"
#include "hk/series/series_poly.hpp"
#include "hk/series/trunc_series.hpp"

using namespace hk;

namespace {

Scalar term(const SeriesPoly& p, Monomial omega, std::size_t s) {
  auto it = p.terms().find(TermKey{std::move(omega), s});
  return it == p.terms().end() ? Scalar() : it->second(0, 0);
}

Matrix matrix_term(const SeriesPoly& p, Monomial omega, std::size_t s) {
  auto it = p.terms().find(TermKey{std::move(omega), s});
  return it == p.terms().end() ? Matrix(p.dim(), p.dim()) : it->second;
}

/// Coefficients of x/sin(x) = Σ c_k x^k found by series division, an
/// independent route to the tangent-determinant series.
TruncSeries x_over_sin(std::size_t order) {
  TruncSeries sinc(order);
  mpz_class f = 1;
  for (std::size_t k = 0; k <= order; ++k) {
    if (k > 0) f *= static_cast<unsigned long>(k + 1);
    if (k % 2 == 0) sinc.at(k) = Scalar(Rational(mpz_class((k / 2) % 2 == 0 ? 1 : -1), f));
  }
  TruncSeries inv(order);
  inv.at(0) = Scalar(1);
  for (std::size_t k = 1; k <= order; ++k) {
    Scalar s;
    for (std::size_t j = 1; j <= k; ++j) s += sinc[j] * inv[k - j];
    inv.at(k) = -s;
  }
  return inv;
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("log sinhc coefficients") {
    const TruncSeries c2 = log_sinhc_coeffs(2);
    CHECK(c2[0] == Scalar(0));
    CHECK(c2[1] == Scalar(0));
    CHECK(c2[2] == Scalar(Rational(1, 6)));
    const TruncSeries c6 = log_sinhc_coeffs(6);
    CHECK(c6[4] == Scalar(Rational(-1, 180)));
    CHECK(c6[6] == Scalar(Rational(1, 2835)));
    CHECK(log_sinhc_coeffs(0)[0] == Scalar(0));
  }

  TEST_CASE("exp and log are inverse on random series") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
      TruncSeries f(6);
      f.at(0) = Scalar(1);
      for (std::size_t k = 1; k <= 6; ++k) f.at(k) = Scalar(test::small_rational(rng));
      CHECK(f.log().exp() == f);
    }
    CHECK_THROWS_AS(TruncSeries::constant(Scalar(2), 3).log(), std::domain_error);
    CHECK_THROWS_AS(TruncSeries::constant(Scalar(1), 3).exp(), std::domain_error);
  }

  TEST_CASE("tangent determinant pencil of the two-sphere") {
    const std::vector<Matrix> A{Matrix{{0, -1}, {1, 0}}};
    const SeriesLimits limits{4, 4};
    const SeriesPoly p = det_sinhc_pencil(A, 2, 1, Scalar::fraction(1, 2), Rational(-1, 2), limits);
    CHECK(term(p, {0}, 0) == Scalar(1));
    CHECK(term(p, {2}, 2) == Scalar(Rational(1, 24)));
    CHECK(term(p, {4}, 4) == Scalar(Rational(7, 5760)));
    // Eigenvalues ±i turn det(sinhc(z A))^{-1/2} into z/sin(z) with z = sω/2.
    const TruncSeries ref = x_over_sin(4);
    CHECK(term(p, {2}, 2) == ref[2] * Scalar::fraction(1, 4));
    CHECK(term(p, {4}, 4) == ref[4] * Scalar::fraction(1, 16));
  }

  TEST_CASE("trivial pencils") {
    const SeriesLimits limits{4, 4};
    const std::vector<Matrix> zero{Matrix(2, 2)};
    const SeriesPoly z = det_sinhc_pencil(zero, 2, 1, Scalar(1), Rational(-1, 2), limits);
    CHECK(z.terms().size() == 1);
    CHECK(term(z, {0}, 0) == Scalar(1));
    const SeriesPoly empty = det_sinhc_pencil({}, 2, 0, Scalar(1), Rational(1, 2), limits);
    CHECK(empty.terms().size() == 1);
    CHECK_THROWS_AS(det_sinhc_pencil(zero, 2, 1, Scalar(1), Rational(1, 2), SeriesLimits{6, 4}),
                    std::invalid_argument);
  }

  TEST_CASE("opposite exponents cancel") {
    std::mt19937_64 rng(5);
    std::vector<Matrix> A;
    for (int i = 0; i < 2; ++i) A.push_back(test::random_matrix(rng, 3, 3));
    const SeriesLimits limits{6, 6};
    const SeriesPoly plus = det_sinhc_pencil(A, 3, 2, Scalar::fraction(1, 2), Rational(1, 2), limits);
    const SeriesPoly minus = det_sinhc_pencil(A, 3, 2, Scalar::fraction(1, 2), Rational(-1, 2), limits);
    const SeriesPoly product = plus * minus;
    CHECK(product.terms().size() == 1);
    CHECK(term(product, {0, 0}, 0) == Scalar(1));
  }

  TEST_CASE("pencil parity and truncation stability") {
    const SymmetricSpaceModel m = catalog_space(SphereSpec{3, Rational(1)});
    const SeriesPoly small = det_sinhc_pencil(m.D, 3, 3, Scalar::fraction(1, 2), Rational(-1, 2), {4, 4});
    const SeriesPoly large = det_sinhc_pencil(m.D, 3, 3, Scalar::fraction(1, 2), Rational(-1, 2), {8, 8});
    for (const auto& [key, value] : large.terms()) {
      CHECK(degree(key.omega) == key.s);
      CHECK(key.s % 2 == 0);
      if (key.s <= 4) CHECK(term(small, key.omega, key.s) == value(0, 0));
    }
    for (const auto& [key, value] : small.terms()) CHECK(term(large, key.omega, key.s) == value(0, 0));
  }

  TEST_CASE("cosh pencil") {
    const SeriesLimits limits{4, 4};
    const SymmetricSpaceModel m = catalog_space(SphereSpec{2, Rational(1)});
    const FiberRep spinor = catalog_rep(m, SpinorRepSpec{});
    const SeriesPoly cs = cosh_pencil(spinor.R, 2, limits);
    CHECK(matrix_term(cs, {0}, 0) == Matrix::identity(2));
    CHECK(matrix_term(cs, {2}, 2) == Matrix::scalar(2, Scalar(Rational(-1, 8))));
    CHECK(matrix_term(cs, {1}, 1).is_zero());

    const FiberRep vector = catalog_rep(m, VectorRepSpec{});
    const SeriesPoly cv = cosh_pencil(vector.R, 2, limits);
    CHECK(matrix_term(cv, {2}, 2) == Matrix::scalar(2, Scalar(Rational(-1, 2))));
    CHECK(matrix_term(cv, {4}, 4) == Matrix::scalar(2, Scalar(Rational(1, 24))));

    const FiberRep scalar = catalog_rep(m, ScalarRepSpec{});
    const SeriesPoly c0 = cosh_pencil(scalar.R, 1, limits);
    CHECK(c0.terms().size() == 1);
  }

  TEST_CASE("matrix exponential series") {
    const MatrixSeries zero = matrix_exp_series(Matrix(2, 2), 3);
    CHECK(zero[0] == Matrix::identity(2));
    CHECK(zero[2].is_zero());
    const MatrixSeries c = matrix_exp_series(Matrix::scalar(2, Scalar(3)), 3);
    CHECK(c[2] == Matrix::scalar(2, Scalar(Rational(9, 2))));
    const MatrixSeries s2 = matrix_exp_series(Matrix::scalar(1, Scalar(Rational(1, 4))), 2);
    CHECK(s2[1](0, 0) == Scalar(Rational(1, 4)));
    CHECK(s2[2](0, 0) == Scalar(Rational(1, 32)));
  }

  TEST_CASE("twist determinant series") {
    CHECK(det_sinhc_numeric(Matrix(2, 2), Rational(-1, 2), 4) == TruncSeries::constant(Scalar(1), 4));
    const Rational b(2, 3);
    Matrix B(2, 2);
    B.at(0, 1) = Scalar::imaginary(b);
    B.at(1, 0) = Scalar::imaginary(-b);
    const TruncSeries d = det_sinhc_numeric(B, Rational(-1, 2), 4);
    // Eigenvalues ±b are real, so the factor is tb/sinh(tb) = 1 − (tb)²/6 + 7(tb)⁴/360.
    CHECK(d[2] == Scalar(-b * b / 6));
    CHECK(d[4] == Scalar(Rational(7, 360) * b * b * b * b));

    Matrix block(4, 4);
    block.at(0, 1) = Scalar::imaginary(b);
    block.at(1, 0) = Scalar::imaginary(-b);
    block.at(2, 3) = Scalar::imaginary(Rational(1));
    block.at(3, 2) = Scalar::imaginary(Rational(-1));
    Matrix other(2, 2);
    other.at(0, 1) = Scalar::i();
    other.at(1, 0) = -Scalar::i();
    CHECK(det_sinhc_numeric(block, Rational(-1, 2), 6) ==
          det_sinhc_numeric(B, Rational(-1, 2), 6) * det_sinhc_numeric(other, Rational(-1, 2), 6));
  }

  TEST_CASE("products do not depend on the thread count") {
    const SymmetricSpaceModel m = catalog_space(SphereSpec{3, Rational(1)});
    const unsigned saved = thread_count();
    set_thread_count(1);
    const SeriesPoly one = det_sinhc_pencil(m.D, 3, 3, Scalar::fraction(1, 2), Rational(-1, 2), {6, 6});
    set_thread_count(3);
    const SeriesPoly three = det_sinhc_pencil(m.D, 3, 3, Scalar::fraction(1, 2), Rational(-1, 2), {6, 6});
    set_thread_count(saved);
    REQUIRE(one.terms().size() == three.terms().size());
    auto a = one.terms().begin();
    auto b = three.terms().begin();
    for (; a != one.terms().end(); ++a, ++b) {
      CHECK(a->first.omega == b->first.omega);
      CHECK(a->second == b->second);
    }
  }

  TEST_CASE("series polynomial shape errors") {
    SeriesPoly p(2, 1, {2, 2});
    CHECK_THROWS_AS(p.add_term({1}, 1, Matrix::identity(1)), DimensionMismatch);
    CHECK_THROWS_AS(p.add_term({1, 0}, 1, Matrix::identity(2)), DimensionMismatch);
    p.add_term({3, 0}, 3, Matrix::identity(1));
    CHECK(p.empty());
    CHECK_THROWS_AS(SeriesPoly::constant(2, Matrix::identity(1), {2, 2}).exp(), std::domain_error);
  }
}
