#pragma once

// Certified numerical Mahler measure.
//
// Roots are located per squarefree factor with Aberth-Ehrlich iteration (a
// double-precision pass, then polishing at the working precision). Each
// approximation z_i carries the inclusion radius n|f(z_i)| / |a_n prod(z_i - z_j)|
// of the Weierstrass correction; discs are required to be pairwise disjoint,
// so every disc holds exactly one root of that factor.

#include <cstddef>
#include <optional>
#include <vector>

#include "mahler/bigfloat.hpp"
#include "mahler/poly.hpp"

namespace mahler {

enum class ModulusClass { kInside, kOnCircle, kOutside };

const char* to_string(ModulusClass c);

struct RootApprox {
  Complex value;
  Real radius;
  ModulusClass modulus_class = ModulusClass::kInside;
  std::size_t multiplicity = 1;
};

struct MahlerResult {
  Real measure;
  double error_bound = 0.0;
  std::vector<RootApprox> roots;  // one entry per distinct root
  mpz_class leading_abs;
  std::size_t zero_root_multiplicity = 0;
  Precision precision_used = kDefaultPrecision;
};

inline constexpr Precision kMaxPrecision = 1024;

// On-circle classification tolerance 2^(-bits/3).
Real circle_tolerance(Precision bits);

// Roots of f (a_0 != 0, degree >= 1) at exactly `bits` of working precision.
// Throws Error(kNumericFailure) if the iteration does not reach inclusion
// radii below 2^(-bits/2). The tolerance override exists for stability tests.
std::vector<RootApprox> find_roots(const IntPolynomial& f, Precision bits);
std::vector<RootApprox> find_roots(const IntPolynomial& f, Precision bits, const Real& circle_tol);

// M(f) with error_bound <= 2^(-bits/4). Escalates precision by doubling up to
// max(bits, kMaxPrecision) before giving up with Error(kNumericFailure).
MahlerResult mahler_measure(const IntPolynomial& f, Precision bits = kDefaultPrecision);
MahlerResult mahler_measure(const IntPolynomial& f, Precision bits, const std::optional<Real>& circle_tol);

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const { return lo <= x && x <= hi; }
};

// Enclosure of M(f) from `iterations` exact Graeffe root-squaring steps and
// the bounds max|c_i|/C(n,i) <= M(g) <= ||g||_2. Requires a_0 != 0.
// Throws Error(kResourceExhausted) if coefficients outgrow `max_bits`.
Interval graeffe_measure(const IntPolynomial& f, unsigned iterations, std::size_t max_bits = std::size_t{1} << 26);

}  // namespace mahler
