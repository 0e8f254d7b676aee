#pragma once

#include "hk/exact/matrix.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace hk {

/// Truncation limits of a SeriesPoly: ω-degree and power of s = √t kept.
struct SeriesLimits {
  std::size_t omega_degree = 0;
  std::size_t s_order = 0;

  friend bool operator==(const SeriesLimits&, const SeriesLimits&) = default;
};

/// Limits needed to produce a_0 … a_kmax: s-order and ω-degree 2·k_max.
SeriesLimits limits_for_order(std::size_t k_max);

/// Exponent vector of an ω-monomial.
using Monomial = std::vector<unsigned>;

std::size_t degree(const Monomial& m);

struct TermKey {
  Monomial omega;
  std::size_t s = 0;
};

/// Graded-lex on the ω exponents (lower degree first; within a degree the
/// larger leading exponent first), then by the power of s.
struct TermOrder {
  bool operator()(const TermKey& x, const TermKey& y) const;
};

/// Matrix-valued polynomial in ω^1 … ω^p whose coefficients are truncated
/// series in s. Stored sparsely as (ω-monomial, s-power) → matrix, which is
/// the same data as "monomial → matrix of series in s" with zero entries dropped.
class SeriesPoly {
 public:
  using TermMap = std::map<TermKey, Matrix, TermOrder>;

  SeriesPoly(std::size_t vars, std::size_t dim, SeriesLimits limits);

  static SeriesPoly constant(std::size_t vars, const Matrix& value, SeriesLimits limits);
  /// s·scale·Σ_i ω^i A_i.
  static SeriesPoly pencil(std::span<const Matrix> generators, std::size_t dim, const Scalar& scale,
                           SeriesLimits limits);

  std::size_t vars() const { return vars_; }
  std::size_t dim() const { return dim_; }
  SeriesLimits limits() const { return limits_; }
  const TermMap& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Accumulates value into the term; drops it when beyond the limits.
  void add_term(const Monomial& omega, std::size_t s, const Matrix& value);

  /// Fiber trace; the result has dim 1.
  SeriesPoly trace() const;
  SeriesPoly scaled(const Scalar& factor) const;
  /// exp of a scalar (dim 1) poly with no constant term.
  SeriesPoly exp() const;

  /// Products truncate to the tighter of the two limits. A dim-1 operand
  /// acts as a scalar on the other one.
  friend SeriesPoly operator*(const SeriesPoly& a, const SeriesPoly& b);
  friend SeriesPoly operator+(const SeriesPoly& a, const SeriesPoly& b);

 private:
  std::size_t vars_;
  std::size_t dim_;
  SeriesLimits limits_;
  TermMap terms_;
};

}  // namespace hk
