#pragma once

// k-nonreciprocality and the lower bound
//
//   M(f) >= (alpha + sqrt(alpha^2 + 4 (|a_0|+|a_n|)^2 |a_0 a_n|)) / (2 (|a_0|+|a_n|)),
//   alpha = |a_k a_n - a_0 a_{n-k}|,
//
// valid when a_n a_i = a_0 a_{n-i} for 1 <= i < k and 2k <= n.

#include <cstddef>
#include <optional>

#include <gmpxx.h>

#include "mahler/bigfloat.hpp"
#include "mahler/poly.hpp"

namespace mahler {

// The bound as (alpha + sqrt(discriminant)) / denominator, all exact.
struct ExactBound {
  mpz_class alpha;
  mpz_class discriminant;
  mpz_class denominator;
};

enum class Triviality { kNontrivial, kTrivial, kNotApplicable };

const char* to_string(Triviality t);

struct NonreciprocalProfile {
  std::optional<std::size_t> k;
  std::optional<mpz_class> alpha;  // present iff k is
  mpz_class a0;
  mpz_class an;
  std::size_t degree = 0;
  bool theorem_applicable = false;
  ExactBound bound_exact;
  Real bound_value;
};

// Smallest i in [1, n] with a_n a_i != a_0 a_{n-i}. Requires a_0 != 0 and
// degree >= 1.
std::optional<std::size_t> detect_k(const IntPolynomial& f);

// |a_k a_n - a_0 a_{n-k}|; k must be the detected index.
mpz_class compute_alpha(const IntPolynomial& f, std::size_t k);

NonreciprocalProfile theorem_bound(const IntPolynomial& f, Precision bits = kDefaultPrecision);

Triviality classify_triviality(const NonreciprocalProfile& profile);

// Exact test of (alpha + sqrt(D)) / denom > value, for value >= 0.
bool bound_exceeds(const ExactBound& bound, const mpz_class& value);

// Exact test of (alpha + sqrt(D)) / denom == (p + sqrt(q)) / r, by matching
// rational and surd parts: alpha r = p denom and D r^2 = q denom^2.
bool bound_equals(const ExactBound& bound, const mpz_class& p, const mpz_class& q, const mpz_class& r);

Real evaluate_bound(const ExactBound& bound, Precision bits);

}  // namespace mahler
