#include "hk/exact/matrix.hpp"

#include "hk/errors.hpp"
#include "hk/exact/solve.hpp"

#include <stdexcept>
#include <string>

namespace hk {

namespace {

std::string shape(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch(std::string(op) + ": " + shape(a) + " vs " + shape(b));
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw DimensionMismatch("matrix entry count does not match shape");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) { return scalar(n, Scalar(1)); }

Matrix Matrix::scalar(std::size_t n, const Scalar& value) {
  Matrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.at(k, k) = value;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r + 1; c < cols_; ++c) {
      if ((*this)(r, c) != (*this)(c, r)) return false;
    }
  }
  return true;
}

bool Matrix::is_antisymmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = r; c < cols_; ++c) {
      if ((*this)(r, c) != -(*this)(c, r)) return false;
    }
  }
  return true;
}

bool Matrix::is_real() const {
  for (const auto& x : data_) {
    if (!x.is_real()) return false;
  }
  return true;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("mat_mul: " + shape(a) + " times " + shape(b));
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& left = a(r, k);
      if (left.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        const Scalar& right = b(k, c);
        if (!right.is_zero()) out.at(r, c) += left * right;
      }
    }
  }
  return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
    throw DimensionMismatch("commutator: " + shape(a) + " vs " + shape(b));
  }
  return sub(mat_mul(a, b), mat_mul(b, a));
}

Matrix add(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "add");
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!b(r, c).is_zero()) out.at(r, c) += b(r, c);
    }
  }
  return out;
}

Matrix sub(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "sub");
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!b(r, c).is_zero()) out.at(r, c) -= b(r, c);
    }
  }
  return out;
}

Matrix scale(const Scalar& factor, const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  if (factor.is_zero()) return out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero()) out.at(r, c) = factor * m(r, c);
    }
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.at(c, r) = m(r, c);
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar) {
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      if (a(ar, ac).is_zero()) continue;
      for (std::size_t br = 0; br < b.rows(); ++br) {
        for (std::size_t bc = 0; bc < b.cols(); ++bc) {
          if (!b(br, bc).is_zero()) out.at(ar * b.rows() + br, ac * b.cols() + bc) = a(ar, ac) * b(br, bc);
        }
      }
    }
  }
  return out;
}

Scalar trace(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("trace of non-square " + shape(m));
  Scalar sum;
  for (std::size_t k = 0; k < m.rows(); ++k) sum += m(k, k);
  return sum;
}

Scalar trace_of_product(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw DimensionMismatch("trace_of_product: " + shape(a) + " vs " + shape(b));
  }
  Scalar sum;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a(r, k).is_zero() && !b(k, r).is_zero()) sum += a(r, k) * b(k, r);
    }
  }
  return sum;
}

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("inverse of non-square " + shape(m));
  const std::size_t n = m.rows();
  Matrix out(n, n);
  std::vector<Scalar> column(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(column.begin(), column.end(), Scalar());
    column[c] = Scalar(1);
    const SolveResult result = solve_exact(m, column);
    if (result.status != SolveStatus::unique) throw std::domain_error("inverse of a singular matrix");
    for (std::size_t r = 0; r < n; ++r) out.at(r, c) = result.x[r];
  }
  return out;
}

Matrix linear_combination(std::span<const Scalar> weights, std::span<const Matrix> terms) {
  if (weights.size() != terms.size() || terms.empty()) {
    throw DimensionMismatch("linear_combination needs matching, non-empty weights and terms");
  }
  Matrix out(terms[0].rows(), terms[0].cols());
  for (std::size_t k = 0; k < terms.size(); ++k) {
    if (weights[k].is_zero()) continue;
    require_same_shape(out, terms[k], "linear_combination");
    for (std::size_t r = 0; r < out.rows(); ++r) {
      for (std::size_t c = 0; c < out.cols(); ++c) {
        if (!terms[k](r, c).is_zero()) out.at(r, c) += weights[k] * terms[k](r, c);
      }
    }
  }
  return out;
}

}  // namespace hk
