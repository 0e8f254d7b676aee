#pragma once

#include <Eigen/Dense>

#include <stdexcept>

namespace hk {

/// Raised when a matrix power series fails to converge.
class SeriesDivergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SinhcCosh {
  Eigen::MatrixXcd sinhc;  // sinh(A)/A
  Eigen::MatrixXcd cosh;
};

/// sinh(A)/A and cosh(A) by Taylor summation on A/2^s followed by s doubling
/// steps sinhc(2x) = sinhc(x)·cosh(x), cosh(2x) = 2cosh(x)² − 1.
SinhcCosh sinhc_cosh(const Eigen::MatrixXcd& A);

/// exp(A) by scaling and squaring of the Taylor series.
Eigen::MatrixXcd expm(const Eigen::MatrixXcd& A);

}  // namespace hk
