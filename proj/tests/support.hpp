#pragma once

// Helpers shared by the test binaries.

#include <cstdint>
#include <random>
#include <string>

#include "leibniz/algebra.hpp"
#include "leibniz/catalog.hpp"

namespace testing {

using leibniz::GaussianRational;
using GR = GaussianRational;
using Law = leibniz::AlgebraLaw<GR>;
using Mat = leibniz::Matrix<GR>;

inline GR random_gaussian(std::mt19937_64& rng, long bound = 5) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return GR(leibniz::Rational(num(rng), den(rng)), leibniz::Rational(num(rng), den(rng)));
}

inline GR random_rational(std::mt19937_64& rng, long bound = 9) {
  std::uniform_int_distribution<long> num(-bound, bound);
  std::uniform_int_distribution<long> den(1, bound);
  return GR(leibniz::Rational(num(rng), den(rng)));
}

inline GR random_nonzero_rational(std::mt19937_64& rng, long bound = 9) {
  GR x;
  do x = random_rational(rng, bound);
  while (x.is_zero());
  return x;
}

// Small integer entries, redrawn until invertible.
inline Mat random_invertible(std::mt19937_64& rng, std::size_t n, long bound = 3) {
  std::uniform_int_distribution<long> d(-bound, bound);
  while (true) {
    Mat m(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = GR(d(rng));
    if (!leibniz::determinant(m).is_zero()) return m;
  }
}

inline leibniz::Vector<GR> random_vector(std::mt19937_64& rng, std::size_t n) {
  leibniz::Vector<GR> v(n);
  for (auto& x : v) x = random_gaussian(rng, 4);
  return v;
}

// Pairwise Leibniz laws of the 3-dimensional catalog.
inline Law mu(const std::string& name) { return leibniz::make_law<GR>(name); }
inline Law mu2(const GR& b) { return leibniz::make_law<GR>("mu2", {b}); }

}  // namespace testing
