#include "hk/exact/solve.hpp"

#include "hk/errors.hpp"

#include <utility>

namespace hk {

namespace {

// Multiplies each row by the lcm of its denominators so the working matrix
// holds Gaussian integers; Bareiss divisions then stay exact.
void clear_row_denominators(std::vector<Scalar>& row) {
  mpz_class lcm = 1;
  for (const auto& x : row) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.re().get_den_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.im().get_den_mpz_t());
  }
  if (lcm == 1) return;
  const Scalar factor{Rational(lcm)};
  for (auto& x : row) x *= factor;
}

}  // namespace

SolveResult solve_exact(const Matrix& a, std::span<const Scalar> b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve_exact: right-hand side length does not match rows");
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();

  std::vector<std::vector<Scalar>> work(rows, std::vector<Scalar>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) work[r][c] = a(r, c);
    work[r][cols] = b[r];
    clear_row_denominators(work[r]);
  }

  std::vector<std::size_t> pivot_cols;
  Scalar previous_pivot(1);
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t r = pivot_row; r < rows; ++r) {
      if (work[r][c].is_zero()) continue;
      if (best == rows || work[r][c].bit_size() < work[best][c].bit_size()) best = r;
    }
    if (best == rows) continue;
    std::swap(work[pivot_row], work[best]);
    const Scalar pivot = work[pivot_row][c];
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      const Scalar factor = work[r][c];
      for (std::size_t k = c; k <= cols; ++k) {
        Scalar value = pivot * work[r][k];
        if (!factor.is_zero()) value -= factor * work[pivot_row][k];
        work[r][k] = value / previous_pivot;
      }
    }
    previous_pivot = pivot;
    pivot_cols.push_back(c);
    ++pivot_row;
  }

  SolveResult result;
  result.rank = pivot_cols.size();
  for (std::size_t r = result.rank; r < rows; ++r) {
    if (!work[r][cols].is_zero()) {
      result.status = SolveStatus::inconsistent;
      result.inconsistent_row = r;
      return result;
    }
  }

  result.x.assign(cols, Scalar());
  for (std::size_t k = result.rank; k-- > 0;) {
    const std::size_t c = pivot_cols[k];
    Scalar rhs = work[k][cols];
    for (std::size_t j = c + 1; j < cols; ++j) {
      if (!work[k][j].is_zero() && !result.x[j].is_zero()) rhs -= work[k][j] * result.x[j];
    }
    result.x[c] = rhs / work[k][c];
  }
  result.status = result.rank == cols ? SolveStatus::unique : SolveStatus::non_unique;
  return result;
}

}  // namespace hk
