#pragma once

// Per-polynomial reconstruction of the series / Blaschke-product argument
// behind the lower bound, with every step checked numerically or exactly.
//
// G(z) = f(z)/f*(z) = sum q_i z^i,   1/f*(z) = sum e_i z^i,
// g(z) = eps * prod_{|a|<1} (z - a)/(1 - conj(a) z)   = sum b_i z^i,
// h(z) =       prod_{|a|>1} (1 - conj(a) z)/(z - a)   = sum c_i z^i,
// with g = h G, |g| = |h| = 1 on the unit circle, and c_0 = |a_n| / M(f).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "mahler/bigfloat.hpp"
#include "mahler/measure.hpp"
#include "mahler/poly.hpp"

namespace mahler {

// Taylor coefficients q_0..q_L of f/f*. Requires a_0 a_n > 0.
std::vector<mpq_class> q_series(const IntPolynomial& f, std::size_t truncation);

// Taylor coefficients e_0..e_L of 1/fstar. Requires fstar(0) != 0.
std::vector<mpq_class> inverse_series(const IntPolynomial& fstar, std::size_t truncation);

// -1 if z = 1 is a zero of odd multiplicity, +1 otherwise.
int epsilon_sign(const IntPolynomial& f);

struct BlaschkeSplit {
  std::vector<Complex> b;  // g coefficients
  std::vector<Complex> c;  // h coefficients
  int epsilon = 1;
  // Both series were multiplied by this sign so that c_0 = h(0) > 0; the
  // quotient g/h is unchanged and both stay unimodular on the circle.
  int normalization = 1;
  Complex on_circle_product;  // prod over on-circle roots of (-alpha_i)
  MahlerResult measure;
};

// Requires a_0 != 0. Uses the roots (and working precision) of mahler_measure.
BlaschkeSplit blaschke_split(const IntPolynomial& f, Precision bits, std::size_t truncation);

// g and h evaluated as products at z.
Complex evaluate_g(const BlaschkeSplit& split, const Complex& z);
Complex evaluate_h(const BlaschkeSplit& split, const Complex& z);

struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
  std::optional<double> slack;  // rhs - lhs for inequality checks
};

struct Certificate {
  std::size_t truncation = 0;
  std::size_t k = 0;
  Precision precision = kDefaultPrecision;
  std::vector<mpq_class> q;
  std::vector<mpq_class> e;
  int epsilon = 1;
  int normalization = 1;
  std::vector<Complex> b;
  std::vector<Complex> c;
  Real measure;
  double measure_error = 0.0;
  double tolerance = 0.0;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  const CheckResult* find(std::string_view name) const;
};

std::size_t default_truncation(std::size_t k);

// Requires positive endpoints, a detected k with 2k <= n, and L >= k.
// Returns a certificate even when checks fail; inspect `checks`.
Certificate build_certificate(const IntPolynomial& f, std::optional<std::size_t> truncation,
                              Precision bits = kDefaultPrecision);

}  // namespace mahler
