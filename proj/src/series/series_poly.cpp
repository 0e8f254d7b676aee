#include "hk/series/series_poly.hpp"

#include "hk/errors.hpp"
#include "hk/parallel.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hk {

namespace {

SeriesLimits tighter(SeriesLimits a, SeriesLimits b) {
  return {std::min(a.omega_degree, b.omega_degree), std::min(a.s_order, b.s_order)};
}

Matrix times(const Matrix& x, const Matrix& y) {
  if (x.rows() == 1 && y.rows() != 1) return scale(x(0, 0), y);
  if (y.rows() == 1 && x.rows() != 1) return scale(y(0, 0), x);
  return mat_mul(x, y);
}

}  // namespace

SeriesLimits limits_for_order(std::size_t k_max) { return {2 * k_max, 2 * k_max}; }

std::size_t degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), std::size_t{0}); }

bool TermOrder::operator()(const TermKey& x, const TermKey& y) const {
  const std::size_t dx = degree(x.omega);
  const std::size_t dy = degree(y.omega);
  if (dx != dy) return dx < dy;
  if (x.omega != y.omega) return std::lexicographical_compare(y.omega.begin(), y.omega.end(), x.omega.begin(), x.omega.end());
  return x.s < y.s;
}

SeriesPoly::SeriesPoly(std::size_t vars, std::size_t dim, SeriesLimits limits)
    : vars_(vars), dim_(dim), limits_(limits) {}

SeriesPoly SeriesPoly::constant(std::size_t vars, const Matrix& value, SeriesLimits limits) {
  SeriesPoly out(vars, value.rows(), limits);
  out.add_term(Monomial(vars, 0), 0, value);
  return out;
}

SeriesPoly SeriesPoly::pencil(std::span<const Matrix> generators, std::size_t dim, const Scalar& scale_factor,
                              SeriesLimits limits) {
  SeriesPoly out(generators.size(), dim, limits);
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].rows() != dim || generators[i].cols() != dim) {
      throw DimensionMismatch("pencil generators must share one square size");
    }
    Monomial m(generators.size(), 0);
    m[i] = 1;
    out.add_term(m, 1, scale(scale_factor, generators[i]));
  }
  return out;
}

void SeriesPoly::add_term(const Monomial& omega, std::size_t s, const Matrix& value) {
  if (omega.size() != vars_) throw DimensionMismatch("monomial has the wrong number of variables");
  if (value.rows() != dim_ || value.cols() != dim_) throw DimensionMismatch("term matrix has the wrong fiber size");
  if (degree(omega) > limits_.omega_degree || s > limits_.s_order) return;
  if (value.is_zero()) return;
  TermKey key{omega, s};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), value);
    return;
  }
  it->second = add(it->second, value);
  if (it->second.is_zero()) terms_.erase(it);
}

SeriesPoly SeriesPoly::trace() const {
  SeriesPoly out(vars_, 1, limits_);
  for (const auto& [key, value] : terms_) out.add_term(key.omega, key.s, Matrix::scalar(1, hk::trace(value)));
  return out;
}

SeriesPoly SeriesPoly::scaled(const Scalar& factor) const {
  SeriesPoly out(vars_, dim_, limits_);
  for (const auto& [key, value] : terms_) out.add_term(key.omega, key.s, scale(factor, value));
  return out;
}

SeriesPoly SeriesPoly::exp() const {
  if (dim_ != 1) throw DimensionMismatch("exp is defined for scalar series polynomials only");
  if (terms_.count(TermKey{Monomial(vars_, 0), 0}) != 0) {
    throw std::domain_error("exp of a series polynomial needs a zero constant term");
  }
  SeriesPoly result = constant(vars_, Matrix::identity(1), limits_);
  SeriesPoly power = result;
  for (long j = 1; !power.empty(); ++j) {
    power = (power * *this).scaled(Scalar::fraction(1, j));
    result = result + power;
  }
  return result;
}

SeriesPoly operator+(const SeriesPoly& a, const SeriesPoly& b) {
  if (a.vars_ != b.vars_ || a.dim_ != b.dim_) throw DimensionMismatch("adding series polynomials of different shape");
  SeriesPoly out(a.vars_, a.dim_, tighter(a.limits_, b.limits_));
  for (const auto& [key, value] : a.terms_) out.add_term(key.omega, key.s, value);
  for (const auto& [key, value] : b.terms_) out.add_term(key.omega, key.s, value);
  return out;
}

SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b) {
  if (a.vars_ != b.vars_) throw DimensionMismatch("multiplying series polynomials in different variables");
  if (a.dim_ != b.dim_ && a.dim_ != 1 && b.dim_ != 1) throw DimensionMismatch("fiber sizes do not match");
  const SeriesLimits limits = tighter(a.limits_, b.limits_);
  const std::size_t dim = std::max(a.dim_, b.dim_);

  std::vector<const SeriesPoly::TermMap::value_type*> left;
  left.reserve(a.terms_.size());
  for (const auto& term : a.terms_) left.push_back(&term);

  std::vector<SeriesPoly> partial(chunk_count(left.size()), SeriesPoly(a.vars_, dim, limits));
  parallel_chunks(left.size(), [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    SeriesPoly& acc = partial[chunk];
    Monomial product(a.vars_);
    for (std::size_t k = begin; k < end; ++k) {
      const auto& [lkey, lvalue] = *left[k];
      const std::size_t ldeg = degree(lkey.omega);
      for (const auto& [rkey, rvalue] : b.terms_) {
        if (ldeg + degree(rkey.omega) > limits.omega_degree) break;  // graded order: later terms only grow
        if (lkey.s + rkey.s > limits.s_order) continue;
        for (std::size_t v = 0; v < a.vars_; ++v) product[v] = lkey.omega[v] + rkey.omega[v];
        acc.add_term(product, lkey.s + rkey.s, times(lvalue, rvalue));
      }
    }
  });

  SeriesPoly out(a.vars_, dim, limits);
  for (const auto& p : partial) {
    for (const auto& [key, value] : p.terms_) out.add_term(key.omega, key.s, value);
  }
  return out;
}

}  // namespace hk
