#pragma once

// The extremal family f = (a x^{2k} + b x^k + c)(x^{n-2k} - 1) with
// a > 0 > c, a - |b| <= -c <= a + |b|, n > 2k, n != 3k, whose measure
// (|b| + sqrt(b^2 - 4ac)) / 2 meets the lower bound exactly.

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "mahler/bigfloat.hpp"
#include "mahler/poly.hpp"

namespace mahler {

struct SharpFamilyParams {
  mpz_class a;
  mpz_class b;
  mpz_class c;
  std::size_t k = 1;
  std::size_t n = 3;
};

// Throws Error(kInvalidInput) naming the first violated constraint.
void validate(const SharpFamilyParams& p);

// Which of the four expansion shapes applies.
enum class ExpansionCase { kAboveFourK, kFourK, kBetweenThreeAndFourK, kBetweenTwoAndThreeK };

const char* to_string(ExpansionCase c);
ExpansionCase expansion_case(const SharpFamilyParams& p);

// Expanded from the case-specific coefficient layout and cross-checked
// against the factored product.
IntPolynomial construct(const SharpFamilyParams& p);

// Checks only the coefficient constraints on (a, b, c).
Real closed_form_measure(const mpz_class& a, const mpz_class& b, const mpz_class& c,
                         Precision bits = kDefaultPrecision);

struct SharpnessReport {
  IntPolynomial polynomial;
  ExpansionCase expansion = ExpansionCase::kAboveFourK;
  bool applicable = false;  // false exactly when b = 0 (reciprocal member)
  mpz_class alpha;
  bool alpha_matches = false;   // alpha == |b (a - c)|
  bool exact_identity = false;  // bound == closed form, in integers
  bool detected_k_matches = false;
  Real bound;
  Real closed_form;
  Real numeric_measure;
  double numeric_error = 0.0;
  double max_discrepancy = 0.0;
  double tolerance = 0.0;  // 2^(-bits/4)
  bool agrees() const;
};

SharpnessReport verify_sharpness(const SharpFamilyParams& p, Precision bits = kDefaultPrecision);

// a in [1,4], b in [-4,4], c in [-4,-1] where valid; k in {1,2,3};
// n in {2k+1, ..., 5k+1} minus {3k}.
std::vector<SharpFamilyParams> sampling_grid(bool include_b_zero = true);

}  // namespace mahler
