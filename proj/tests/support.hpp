#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "mahler/poly.hpp"

namespace test {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20240611);
  return engine;
}

// Uniform degree in [1, max_degree], coefficients in [-height, height],
// nonzero leading and (optionally) constant coefficient.
inline mahler::IntPolynomial random_poly(int max_degree, long height, bool nonzero_constant = true) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  std::uniform_int_distribution<long> coef(-height, height);
  const int d = deg(rng());
  std::vector<mpz_class> c(d + 1);
  for (auto& x : c) x = coef(rng());
  while (c[d] == 0) c[d] = coef(rng());
  while (nonzero_constant && c[0] == 0) c[0] = coef(rng());
  return mahler::IntPolynomial(std::move(c));
}

inline long random_int(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

}  // namespace test
