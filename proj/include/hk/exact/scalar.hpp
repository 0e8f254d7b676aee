#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>

namespace hk {

using Rational = mpq_class;

/// Renders a rational as "p/q"; the denominator is always written, so one is "1/1".
std::string rational_to_string(const Rational& value);

/// Parses "p/q" or a bare integer "p". Throws std::invalid_argument on bad input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Exact Gaussian rational re + im·i.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT: integers promote implicitly
  Scalar(int value) : re_(value) {}   // NOLINT
  Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }  // NOLINT
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Scalar fraction(long numerator, long denominator);
  static Scalar imaginary(Rational im) { return {Rational(0), std::move(im)}; }
  static Scalar i() { return imaginary(Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const { return {re_, -im_}; }
  /// |z|² = re² + im².
  Rational norm2() const { return re_ * re_ + im_ * im_; }

  /// Sum of the bit lengths of all numerators and denominators; used as a
  /// pivot-size heuristic.
  std::size_t bit_size() const;

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  /// "p/q" when real, otherwise "p/q+p/q*i" style.
  std::string to_string() const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  /// Throws std::domain_error on division by zero.
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend Scalar operator-(const Scalar& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& value);

}  // namespace hk
