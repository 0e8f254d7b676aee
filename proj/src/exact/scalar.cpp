#include "hk/exact/scalar.hpp"

#include <ostream>
#include <stdexcept>

namespace hk {

std::string rational_to_string(const Rational& value) {
  Rational r = value;
  r.canonicalize();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  auto is_integer = [](std::string_view s) {
    if (s.empty()) return false;
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) return false;
    for (std::size_t k = start; k < s.size(); ++k) {
      if (s[k] < '0' || s[k] > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer(num) || !is_integer(den) || den[0] == '-' || den[0] == '+') {
    throw std::invalid_argument("not a rational \"p/q\": '" + std::string(text) + "'");
  }
  std::string num_str(num.front() == '+' ? num.substr(1) : num);
  mpz_class n(num_str, 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Scalar Scalar::fraction(long numerator, long denominator) {
  if (denominator == 0) throw std::domain_error("zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return Scalar(r);
}

std::size_t Scalar::bit_size() const {
  auto bits = [](const mpz_class& z) { return mpz_sizeinbase(z.get_mpz_t(), 2); };
  return bits(re_.get_num()) + bits(re_.get_den()) + bits(im_.get_num()) + bits(im_.get_den());
}

std::string Scalar::to_string() const {
  if (is_real()) return rational_to_string(re_);
  std::string out;
  if (sgn(re_) != 0) out = rational_to_string(re_) + (sgn(im_) > 0 ? "+" : "");
  return out + rational_to_string(im_) + "*i";
}

Scalar& Scalar::operator+=(const Scalar& other) {
  re_ += other.re_;
  if (sgn(other.im_) != 0) im_ += other.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  re_ -= other.re_;
  if (sgn(other.im_) != 0) im_ -= other.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  if (is_real() && other.is_real()) {
    re_ *= other.re_;
    return *this;
  }
  Rational re = re_ * other.re_ - im_ * other.im_;
  Rational im = re_ * other.im_ + im_ * other.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  if (other.is_zero()) throw std::domain_error("division by zero");
  if (other.is_real()) {
    re_ /= other.re_;
    if (sgn(im_) != 0) im_ /= other.re_;
    return *this;
  }
  const Rational denom = other.norm2();
  *this *= other.conj();
  re_ /= denom;
  im_ /= denom;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Scalar& value) { return os << value.to_string(); }

}  // namespace hk
