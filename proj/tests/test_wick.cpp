#include "doctest.h"
#include "support.hpp"

#include "hk/series/pencils.hpp"
#include "hk/wick/gaussian.hpp"

#include <functional>

using namespace hk;

namespace {

/// Sum over all perfect matchings of Π 2β^{ij}, enumerated without memo.
Scalar matching_sum(std::vector<std::size_t> indices, const Matrix& beta_inv) {
  if (indices.empty()) return Scalar(1);
  if (indices.size() % 2 != 0) return Scalar();
  const std::size_t first = indices.front();
  Scalar total;
  for (std::size_t j = 1; j < indices.size(); ++j) {
    std::vector<std::size_t> rest;
    for (std::size_t k = 1; k < indices.size(); ++k) {
      if (k != j) rest.push_back(indices[k]);
    }
    total += Scalar(2) * beta_inv(first, indices[j]) * matching_sum(rest, beta_inv);
  }
  return total;
}

std::vector<std::size_t> random_indices(std::mt19937_64& rng, std::size_t length, std::size_t vars) {
  std::uniform_int_distribution<std::size_t> pick(0, vars - 1);
  std::vector<std::size_t> out(length);
  for (auto& i : out) i = pick(rng);
  return out;
}

}  // namespace

TEST_SUITE("wick") {
  TEST_CASE("low moments") {
    const Matrix beta{{2, 1}, {1, 3}};
    const GaussianWeight w(beta);
    const Matrix inv = inverse(beta);
    const std::vector<std::size_t> one{0};
    CHECK(average_monomial(one, w).is_zero());
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        const std::vector<std::size_t> pair{i, j};
        CHECK(average_monomial(pair, w) == Scalar(2) * inv(i, j));
        CHECK(symmetrized_moment(pair, w) == Scalar(2) * inv(i, j));
      }
    }
    const GaussianWeight unit(Matrix::identity(1));
    const std::vector<std::size_t> four{0, 0, 0, 0};
    CHECK(average_monomial(four, unit) == Scalar(12));
    CHECK(symmetrized_moment(four, unit) == Scalar(12));
    CHECK(average_monomial({}, unit) == Scalar(1));
  }

  TEST_CASE("pairing recursion matches brute-force matchings") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t p = 1 + static_cast<std::size_t>(trial % 4);
      const Matrix beta = test::random_symmetric_invertible(rng, p);
      const GaussianWeight w(beta);
      const auto idx = random_indices(rng, 2 * (1 + trial % 4), p);
      CHECK(average_monomial(idx, w) == matching_sum(idx, w.beta_inv()));
    }
  }

  TEST_CASE("closed-form moment matches pairing enumeration at degree six") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix beta = test::random_symmetric_invertible(rng, 3);
      const GaussianWeight w(beta);
      const auto idx = random_indices(rng, 6, 3);
      CHECK(symmetrized_moment(idx, w) == average_monomial(idx, w));
    }
    CHECK_THROWS_AS(symmetrized_moment(std::vector<std::size_t>{0, 1, 1}, GaussianWeight(Matrix::identity(2))),
                    std::invalid_argument);
  }

  TEST_CASE("sign covariance under beta to minus beta") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix beta = test::random_symmetric_invertible(rng, 3);
      const GaussianWeight w(beta);
      const GaussianWeight neg(scale(Scalar(-1), beta));
      const std::size_t k = 1 + static_cast<std::size_t>(trial % 4);
      const auto idx = random_indices(rng, 2 * k, 3);
      CHECK(average_monomial(idx, neg) == Scalar(k % 2 == 0 ? 1 : -1) * average_monomial(idx, w));
    }
  }

  TEST_CASE("averaging the two-sphere tangent determinant") {
    const std::vector<Matrix> A{Matrix{{0, -1}, {1, 0}}};
    const SeriesPoly p = det_sinhc_pencil(A, 2, 1, Scalar::fraction(1, 2), Rational(-1, 2), {4, 4});
    const MatrixSeries t = even_part_in_t(average_poly(p, GaussianWeight(Matrix::identity(1))), 2);
    CHECK(t[0](0, 0) == Scalar(1));
    CHECK(t[1](0, 0) == Scalar(Rational(1, 12)));
    CHECK(t[2](0, 0) == Scalar(Rational(7, 480)));
  }

  TEST_CASE("averaging is linear and kills odd degrees") {
    const GaussianWeight w(Matrix{{1, 0}, {0, 2}});
    SeriesPoly odd(2, 1, {4, 4});
    odd.add_term({1, 0}, 1, Matrix::identity(1));
    odd.add_term({2, 1}, 3, Matrix::identity(1));
    const MatrixSeries zero = average_poly(odd, w);
    for (const auto& c : zero.coeffs()) CHECK(c.is_zero());

    SeriesPoly a(2, 1, {4, 4});
    a.add_term({2, 0}, 2, Matrix::scalar(1, Scalar(3)));
    SeriesPoly b(2, 1, {4, 4});
    b.add_term({1, 1}, 2, Matrix::scalar(1, Scalar(5)));
    b.add_term({0, 4}, 4, Matrix::scalar(1, Scalar(-1)));
    const MatrixSeries sum = average_poly(a + b, w);
    const MatrixSeries sa = average_poly(a, w);
    const MatrixSeries sb = average_poly(b, w);
    for (std::size_t k = 0; k <= 4; ++k) CHECK(sum[k] == add(sa[k], sb[k]));

    const SeriesPoly constant = SeriesPoly::constant(2, Matrix::scalar(1, Scalar(7)), {4, 4});
    CHECK(average_poly(constant, w)[0](0, 0) == Scalar(7));
  }

  TEST_CASE("odd powers of the square root are rejected") {
    MatrixSeries s(1, 3);
    s.at(1) = Matrix::identity(1);
    CHECK_THROWS_AS(even_part_in_t(s, 1), std::logic_error);
  }

  TEST_CASE("weight validation") {
    CHECK_THROWS_AS(GaussianWeight(Matrix{{1, 2}, {3, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(GaussianWeight(Matrix{{1, 1}, {1, 1}}), std::domain_error);
    const GaussianWeight indefinite(Matrix{{1, 0}, {0, -1}});
    CHECK(indefinite.pair(1, 1) == Scalar(-2));
  }
}
