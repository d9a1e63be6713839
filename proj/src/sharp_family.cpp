#include "mahler/sharp_family.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mahler/error.hpp"
#include "mahler/measure.hpp"
#include "mahler/nonreciprocal.hpp"

namespace mahler {

namespace {

void check_coefficients(const mpz_class& a, const mpz_class& b, const mpz_class& c) {
  if (!(a > 0)) throw Error(ErrorKind::kInvalidInput, "sharp family: requires a > 0");
  if (!(c < 0)) throw Error(ErrorKind::kInvalidInput, "sharp family: requires c < 0");
  const mpz_class mag = abs(b);
  const mpz_class minus_c = -c;
  if (!(a - mag <= minus_c)) throw Error(ErrorKind::kInvalidInput, "sharp family: requires a - |b| <= -c");
  if (!(minus_c <= a + mag)) throw Error(ErrorKind::kInvalidInput, "sharp family: requires -c <= a + |b|");
}

}  // namespace

void validate(const SharpFamilyParams& p) {
  check_coefficients(p.a, p.b, p.c);
  if (p.k < 1) throw Error(ErrorKind::kInvalidInput, "sharp family: requires k >= 1");
  if (!(p.n > 2 * p.k)) throw Error(ErrorKind::kInvalidInput, "sharp family: requires n > 2k");
  if (p.n == 3 * p.k) throw Error(ErrorKind::kInvalidInput, "sharp family: requires n != 3k");
}

const char* to_string(ExpansionCase c) {
  switch (c) {
    case ExpansionCase::kAboveFourK:
      return "n>4k";
    case ExpansionCase::kFourK:
      return "n=4k";
    case ExpansionCase::kBetweenThreeAndFourK:
      return "4k>n>3k";
    case ExpansionCase::kBetweenTwoAndThreeK:
      return "3k>n>2k";
  }
  return "unknown";
}

ExpansionCase expansion_case(const SharpFamilyParams& p) {
  if (p.n > 4 * p.k) return ExpansionCase::kAboveFourK;
  if (p.n == 4 * p.k) return ExpansionCase::kFourK;
  if (p.n > 3 * p.k) return ExpansionCase::kBetweenThreeAndFourK;
  return ExpansionCase::kBetweenTwoAndThreeK;
}

IntPolynomial construct(const SharpFamilyParams& p) {
  validate(p);
  const std::size_t n = p.n;
  const std::size_t k = p.k;
  std::vector<mpz_class> coeffs(n + 1);
  switch (expansion_case(p)) {
    case ExpansionCase::kAboveFourK:
      // a x^n + b x^{n-k} + c x^{n-2k} - a x^{2k} - b x^k - c
    case ExpansionCase::kBetweenThreeAndFourK:
      // a x^n + b x^{n-k} - a x^{2k} + c x^{n-2k} - b x^k - c
    case ExpansionCase::kBetweenTwoAndThreeK:
      // a x^n - a x^{2k} + b x^{n-k} - b x^k + c x^{n-2k} - c
      coeffs[n] = p.a;
      coeffs[n - k] = p.b;
      coeffs[n - 2 * k] = p.c;
      coeffs[2 * k] = -p.a;
      coeffs[k] = -p.b;
      coeffs[0] = -p.c;
      break;
    case ExpansionCase::kFourK:
      // a x^{4k} + b x^{3k} + (c - a) x^{2k} - b x^k - c
      coeffs[4 * k] = p.a;
      coeffs[3 * k] = p.b;
      coeffs[2 * k] = p.c - p.a;
      coeffs[k] = -p.b;
      coeffs[0] = -p.c;
      break;
  }
  IntPolynomial expanded(std::move(coeffs));

  std::vector<mpz_class> quadratic(2 * k + 1);
  quadratic[2 * k] = p.a;
  quadratic[k] = p.b;
  quadratic[0] = p.c;
  IntPolynomial cyclic = IntPolynomial::monomial(1, n - 2 * k) - IntPolynomial{1};
  IntPolynomial product = multiply(IntPolynomial(std::move(quadratic)), cyclic);
  if (!(expanded == product)) {
    throw Error(ErrorKind::kInvalidInput, "sharp family: case expansion disagrees with factored product");
  }
  return expanded;
}

Real closed_form_measure(const mpz_class& a, const mpz_class& b, const mpz_class& c, Precision bits) {
  check_coefficients(a, b, c);
  mpz_class disc = b * b - 4 * a * c;
  Real value = Real(mpz_class(abs(b)), bits) + sqrt(Real(disc, bits));
  value /= 2L;
  return value;
}

bool SharpnessReport::agrees() const {
  return applicable && alpha_matches && exact_identity && detected_k_matches && max_discrepancy <= tolerance;
}

SharpnessReport verify_sharpness(const SharpFamilyParams& p, Precision bits) {
  SharpnessReport report;
  report.polynomial = construct(p);
  report.expansion = expansion_case(p);
  report.tolerance = std::ldexp(1.0, -static_cast<int>(bits / 4));
  report.closed_form = closed_form_measure(p.a, p.b, p.c, bits);

  const MahlerResult numeric = mahler_measure(report.polynomial, bits);
  report.numeric_measure = numeric.measure;
  report.numeric_error = numeric.error_bound;

  const NonreciprocalProfile profile = theorem_bound(report.polynomial, bits);
  report.bound = profile.bound_value;
  report.applicable = profile.theorem_applicable;
  report.detected_k_matches = profile.k.has_value() && *profile.k == p.k;
  report.alpha = profile.alpha.value_or(0);
  report.alpha_matches = report.alpha == abs(p.b * (p.a - p.c));
  report.exact_identity =
      bound_equals(profile.bound_exact, abs(p.b), p.b * p.b - 4 * p.a * p.c, mpz_class(2));

  Real d1 = abs(report.bound - report.closed_form);
  Real d2 = abs(report.bound - report.numeric_measure);
  Real d3 = abs(report.closed_form - report.numeric_measure);
  report.max_discrepancy = max(d1, max(d2, d3)).to_double();
  return report;
}

std::vector<SharpFamilyParams> sampling_grid(bool include_b_zero) {
  std::vector<SharpFamilyParams> grid;
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t n = 2 * k + 1; n <= 5 * k + 1; ++n) {
      if (n == 3 * k) continue;
      for (long a = 1; a <= 4; ++a) {
        for (long b = -4; b <= 4; ++b) {
          if (b == 0 && !include_b_zero) continue;
          for (long c = -4; c <= -1; ++c) {
            const long mag = std::abs(b);
            if (a - mag <= -c && -c <= a + mag) grid.push_back({a, b, c, k, n});
          }
        }
      }
    }
  }
  return grid;
}

}  // namespace mahler
