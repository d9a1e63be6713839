#include "mahler/nonreciprocal.hpp"

#include <string>

#include "mahler/error.hpp"

namespace mahler {

const char* to_string(Triviality t) {
  switch (t) {
    case Triviality::kNontrivial:
      return "nontrivial";
    case Triviality::kTrivial:
      return "trivial";
    case Triviality::kNotApplicable:
      return "not_applicable";
  }
  return "unknown";
}

namespace {

void require_stripped(const IntPolynomial& f, const char* operation) {
  require_nonzero(f, operation);
  if (f.constant() == 0) {
    throw Error(ErrorKind::kPrecondition, std::string(operation) + ": a_0 = 0; strip zero roots first");
  }
}

}  // namespace

std::optional<std::size_t> detect_k(const IntPolynomial& f) {
  require_stripped(f, "detect_k");
  if (f.degree() < 1) throw Error(ErrorKind::kPrecondition, "detect_k: degree must be at least 1");
  const auto& a = f.coeffs();
  const std::size_t n = a.size() - 1;
  for (std::size_t i = 1; i <= n; ++i) {
    if (a[n] * a[i] != a[0] * a[n - i]) return i;
  }
  return std::nullopt;
}

mpz_class compute_alpha(const IntPolynomial& f, std::size_t k) {
  auto detected = detect_k(f);
  if (!detected || *detected != k) {
    throw Error(ErrorKind::kInvalidInput, "compute_alpha: k = " + std::to_string(k) +
                                              " is not the detected nonreciprocality index (" +
                                              (detected ? std::to_string(*detected) : std::string("none")) + ")");
  }
  const std::size_t n = static_cast<std::size_t>(f.degree());
  return abs(f.coeff(k) * f.coeff(n) - f.coeff(0) * f.coeff(n - k));
}

Real evaluate_bound(const ExactBound& bound, Precision bits) {
  Real value = Real(bound.alpha, bits) + sqrt(Real(bound.discriminant, bits));
  value /= Real(bound.denominator, bits);
  return value;
}

NonreciprocalProfile theorem_bound(const IntPolynomial& f, Precision bits) {
  require_stripped(f, "theorem_bound");
  NonreciprocalProfile profile;
  profile.a0 = f.constant();
  profile.an = f.leading();
  profile.degree = static_cast<std::size_t>(f.degree());
  if (f.degree() >= 1) profile.k = detect_k(f);

  mpz_class alpha = 0;
  if (profile.k) {
    alpha = compute_alpha(f, *profile.k);
    profile.alpha = alpha;
    profile.theorem_applicable = 2 * *profile.k <= profile.degree;
  }
  const mpz_class abs0 = abs(profile.a0);
  const mpz_class absn = abs(profile.an);
  const mpz_class sum = abs0 + absn;
  profile.bound_exact.alpha = alpha;
  profile.bound_exact.discriminant = alpha * alpha + 4 * sum * sum * abs0 * absn;
  profile.bound_exact.denominator = 2 * sum;
  profile.bound_value = evaluate_bound(profile.bound_exact, bits);
  return profile;
}

Triviality classify_triviality(const NonreciprocalProfile& profile) {
  if (!profile.theorem_applicable || !profile.alpha) return Triviality::kNotApplicable;
  mpz_class gap = abs(profile.a0 * profile.a0 - profile.an * profile.an);
  return *profile.alpha > gap ? Triviality::kNontrivial : Triviality::kTrivial;
}

bool bound_exceeds(const ExactBound& bound, const mpz_class& value) {
  // (alpha + sqrt(D)) / denom > value  <=>  sqrt(D) > value*denom - alpha.
  mpz_class rhs = value * bound.denominator - bound.alpha;
  if (rhs < 0) return true;
  return bound.discriminant > rhs * rhs;
}

bool bound_equals(const ExactBound& bound, const mpz_class& p, const mpz_class& q, const mpz_class& r) {
  return bound.alpha * r == p * bound.denominator &&
         bound.discriminant * r * r == q * bound.denominator * bound.denominator;
}

}  // namespace mahler
