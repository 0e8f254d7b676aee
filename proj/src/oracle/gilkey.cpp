#include "hk/oracle/gilkey.hpp"

namespace hk::oracle {

Matrix gilkey_a1(const SymmetricSpaceModel& model, const FiberRep& rep) {
  return Matrix::scalar(rep.dim(), model.scalar_R * Scalar::fraction(1, 6));
}

Matrix gilkey_a2(const SymmetricSpaceModel& model, const FiberRep& rep) {
  const std::size_t n = model.n();
  Scalar riem2;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        for (std::size_t d = 0; d < n; ++d) {
          const Scalar& r = model.riemann(a, b, c, d);
          if (!r.is_zero()) riem2 += r * r;
        }
      }
    }
  }
  Scalar ric2;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) ric2 += model.ricci(a, b) * model.ricci(a, b);
  }
  const Scalar& R = model.scalar_R;
  const Scalar curvature = (riem2 - ric2) * Scalar::fraction(1, 180) + R * R * Scalar::fraction(1, 72);

  Matrix omega2(rep.dim(), rep.dim());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) omega2 = add(omega2, mat_mul(rep.Omega(a, b), rep.Omega(a, b)));
  }
  return add(Matrix::scalar(rep.dim(), curvature), scale(Scalar::fraction(1, 12), omega2));
}

}  // namespace hk::oracle
