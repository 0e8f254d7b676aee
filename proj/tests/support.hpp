#pragma once

#include "hk/bundle/rep.hpp"
#include "hk/space/catalog.hpp"

#include <random>
#include <string>
#include <vector>

namespace hk::test {

inline Rational small_rational(std::mt19937_64& rng, long span = 5, long max_den = 4) {
  std::uniform_int_distribution<long> num(-span, span);
  std::uniform_int_distribution<long> den(1, max_den);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Scalar(small_rational(rng));
  }
  return m;
}

/// Symmetric invertible rational matrix; may be indefinite.
inline Matrix random_symmetric_invertible(std::mt19937_64& rng, std::size_t p) {
  for (;;) {
    Matrix m(p, p);
    for (std::size_t i = 0; i < p; ++i) {
      for (std::size_t j = i; j < p; ++j) {
        const Scalar v(small_rational(rng));
        m.at(i, j) = v;
        m.at(j, i) = v;
      }
    }
    try {
      (void)inverse(m);
      return m;
    } catch (const std::domain_error&) {
    }
  }
}

struct NamedSpace {
  std::string name;
  SpaceSpec spec;
};

inline std::vector<NamedSpace> catalog_grid_spaces() {
  return {
      {"S2", SphereSpec{2, Rational(1)}},
      {"S3", SphereSpec{3, Rational(1)}},
      {"S4", SphereSpec{4, Rational(1)}},
      {"H2", HyperbolicSpec{2, Rational(1)}},
      {"H3", HyperbolicSpec{3, Rational(1)}},
      {"flat(2)xS2", ProductSpec{{FlatSpec{2}, SphereSpec{2, Rational(1)}}}},
  };
}

struct NamedRep {
  std::string name;
  RepSpec spec;
};

inline std::vector<NamedRep> catalog_grid_reps() {
  return {{"scalar", ScalarRepSpec{}}, {"vector", VectorRepSpec{}}, {"spinor", SpinorRepSpec{}}};
}

}  // namespace hk::test
