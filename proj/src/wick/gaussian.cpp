#include "hk/wick/gaussian.hpp"

#include "hk/errors.hpp"

#include <stdexcept>

namespace hk {

namespace {

Monomial exponents_of(std::span<const std::size_t> indices, std::size_t vars) {
  Monomial e(vars, 0);
  for (std::size_t i : indices) {
    if (i >= vars) throw std::out_of_range("monomial index exceeds the number of variables");
    ++e[i];
  }
  return e;
}

Rational factorial(unsigned k) {
  mpz_class f = 1;
  for (unsigned j = 2; j <= k; ++j) f *= j;
  return Rational(f);
}

}  // namespace

GaussianWeight::GaussianWeight(const Matrix& beta) {
  if (!beta.is_square()) throw std::invalid_argument("beta must be square");
  if (!beta.is_symmetric()) throw std::invalid_argument("beta must be symmetric");
  beta_inv_ = inverse(beta);
  if (mat_mul(beta, beta_inv_) != Matrix::identity(beta.rows())) {
    throw std::logic_error("beta inverse failed verification");
  }
  covariance_ = scale(Scalar(2), beta_inv_);
}

const Scalar& WickAverager::average(const Monomial& exponents) {
  if (exponents.size() != weight_.vars()) throw DimensionMismatch("monomial has the wrong number of variables");
  if (auto it = cache_.find(exponents); it != cache_.end()) return it->second;

  Scalar value;
  const std::size_t deg = degree(exponents);
  if (deg == 0) {
    value = Scalar(1);
  } else if (deg % 2 == 0) {
    std::size_t first = 0;
    while (exponents[first] == 0) ++first;
    Monomial rest = exponents;
    --rest[first];
    for (std::size_t j = 0; j < rest.size(); ++j) {
      if (rest[j] == 0 || weight_.pair(first, j).is_zero()) continue;
      Monomial reduced = rest;
      --reduced[j];
      value += Scalar(static_cast<long>(rest[j])) * weight_.pair(first, j) * average(reduced);
    }
  }
  return cache_.emplace(exponents, std::move(value)).first->second;
}

Scalar average_monomial(std::span<const std::size_t> indices, const GaussianWeight& w) {
  if (indices.size() % 2 != 0) return Scalar();
  WickAverager averager(w);
  return averager.average(exponents_of(indices, w.vars()));
}

MatrixSeries average_poly(const SeriesPoly& poly, const GaussianWeight& w) {
  if (poly.vars() != w.vars()) throw DimensionMismatch("series polynomial and weight use different variables");
  WickAverager averager(w);
  MatrixSeries out(poly.dim(), poly.limits().s_order);
  for (const auto& [key, value] : poly.terms()) {
    if (degree(key.omega) % 2 != 0) continue;
    const Scalar& avg = averager.average(key.omega);
    if (avg.is_zero()) continue;
    out.at(key.s) = add(out[key.s], scale(avg, value));
  }
  return out;
}

MatrixSeries even_part_in_t(const MatrixSeries& in_s, std::size_t t_order) {
  MatrixSeries out(in_s.dim(), t_order);
  for (std::size_t k = 0; k <= in_s.max_order(); ++k) {
    if (k % 2 != 0) {
      if (!in_s[k].is_zero()) throw std::logic_error("odd power of sqrt(t) survived the average");
      continue;
    }
    if (k / 2 <= t_order) out.at(k / 2) = in_s[k];
  }
  return out;
}

Scalar symmetrized_moment(std::span<const std::size_t> indices, const GaussianWeight& w) {
  if (indices.size() % 2 != 0) throw std::invalid_argument("symmetrized moment needs an even number of indices");
  const std::size_t vars = w.vars();
  const Monomial target = exponents_of(indices, vars);
  const unsigned k = static_cast<unsigned>(indices.size() / 2);

  // Expand (uᵀβ⁻¹u)^k, keeping only monomials that still divide u^target.
  std::vector<std::pair<Monomial, Scalar>> quadratic;
  for (std::size_t i = 0; i < vars; ++i) {
    for (std::size_t j = i; j < vars; ++j) {
      Scalar c = w.beta_inv()(i, j);
      if (i != j) c = c + w.beta_inv()(j, i);
      if (c.is_zero()) continue;
      Monomial m(vars, 0);
      ++m[i];
      ++m[j];
      quadratic.emplace_back(std::move(m), std::move(c));
    }
  }
  std::map<Monomial, Scalar> power{{Monomial(vars, 0), Scalar(1)}};
  for (unsigned step = 0; step < k; ++step) {
    std::map<Monomial, Scalar> next;
    for (const auto& [m, c] : power) {
      for (const auto& [q, d] : quadratic) {
        Monomial product(vars);
        bool fits = true;
        for (std::size_t v = 0; v < vars; ++v) {
          product[v] = m[v] + q[v];
          fits = fits && product[v] <= target[v];
        }
        if (fits) next[product] += c * d;
      }
    }
    power = std::move(next);
  }

  auto it = power.find(target);
  if (it == power.end()) return Scalar();
  Rational weight_factor = 1;
  for (unsigned e : target) weight_factor *= factorial(e);
  weight_factor /= factorial(k);
  return Scalar(weight_factor) * it->second;
}

}  // namespace hk
