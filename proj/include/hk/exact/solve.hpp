#pragma once

#include "hk/exact/matrix.hpp"

#include <optional>
#include <span>
#include <vector>

namespace hk {

enum class SolveStatus { unique, non_unique, inconsistent };

struct SolveResult {
  SolveStatus status = SolveStatus::inconsistent;
  /// Exact solution when unique; a particular solution (free variables set to
  /// zero) when non_unique; empty when inconsistent.
  std::vector<Scalar> x;
  std::size_t rank = 0;
  /// Row of the eliminated system that exposed the inconsistency.
  std::optional<std::size_t> inconsistent_row;
};

/// Solves a·x = b exactly for any shape of a by fraction-free (Bareiss)
/// elimination. Each step pivots on the smallest-bit-size nonzero entry.
/// Throws DimensionMismatch when b.size() != a.rows().
SolveResult solve_exact(const Matrix& a, std::span<const Scalar> b);

}  // namespace hk
