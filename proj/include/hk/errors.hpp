#pragma once

#include <stdexcept>
#include <string>

namespace hk {

/// Operand shapes do not fit the requested operation.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The curvature data cannot be turned into a symmetric-space model.
class ModelError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fiber generators or twist violate the homogeneous-bundle constraints.
class RepError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested expansion order exceeds what the series engine supports.
class TruncationOverflow : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed job file or descriptor.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hk
