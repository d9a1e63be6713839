#include "mahler/measure.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>

#include "mahler/error.hpp"

namespace mahler {

const char* to_string(ModulusClass c) {
  switch (c) {
    case ModulusClass::kInside:
      return "inside";
    case ModulusClass::kOnCircle:
      return "on_circle";
    case ModulusClass::kOutside:
      return "outside";
  }
  return "unknown";
}

Real circle_tolerance(Precision bits) { return pow2(-static_cast<long>(bits / 3), bits); }

namespace {

using DComplex = std::complex<double>;

struct Disc {
  Complex center;
  Real radius;
};

// Fujiwara bound on root moduli: 2 max(|a_{n-i}/a_n|^{1/i}, |a_0/(2a_n)|^{1/n}).
double fujiwara_bound(const std::vector<double>& a) {
  const std::size_t n = a.size() - 1;
  double best = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    double ratio = std::abs(a[n - i] / a[n]);
    if (i == n) ratio /= 2.0;
    best = std::max(best, std::pow(ratio, 1.0 / static_cast<double>(i)));
  }
  return 2.0 * best;
}

// Coefficients as doubles, or empty if any is out of comfortable range.
std::vector<double> to_doubles(const IntPolynomial& g) {
  std::vector<double> out;
  out.reserve(g.coeffs().size());
  for (const auto& c : g.coeffs()) {
    if (mpz_sizeinbase(c.get_mpz_t(), 2) > 500) return {};
    out.push_back(c.get_d());
  }
  return out;
}

std::vector<DComplex> initial_circle(double radius, std::size_t n) {
  std::vector<DComplex> z(n);
  for (std::size_t j = 0; j < n; ++j) {
    double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n) + 0.4;
    z[j] = std::polar(radius, theta);
  }
  return z;
}

// Aberth pass in double precision; returns its best approximations even if
// not fully converged, since the multiprecision pass continues from them.
std::vector<DComplex> aberth_double(const std::vector<double>& a) {
  const std::size_t n = a.size() - 1;
  std::vector<DComplex> z = initial_circle(fujiwara_bound(a), n);
  for (int iter = 0; iter < 500; ++iter) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      DComplex p = a[n];
      DComplex dp = 0.0;
      for (std::size_t k = n; k-- > 0;) {
        dp = dp * z[i] + p;
        p = p * z[i] + a[k];
      }
      if (p == 0.0) continue;
      DComplex ratio = p / dp;
      DComplex sum = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) sum += 1.0 / (z[i] - z[j]);
      }
      DComplex step = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) continue;
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    if (worst < 1e-15) break;
  }
  return z;
}

// Horner evaluation of g and g' at z.
void evaluate_with_derivative(const std::vector<Real>& a, const Complex& z, Complex& p, Complex& dp) {
  const std::size_t n = a.size() - 1;
  const Precision bits = z.precision();
  p = Complex(a[n], Real(bits));
  dp = Complex(bits);
  for (std::size_t k = n; k-- > 0;) {
    dp *= z;
    dp += p;
    p *= z;
    p.real() += a[k];
  }
}

Complex evaluate(const std::vector<Real>& a, const Complex& z) {
  const std::size_t n = a.size() - 1;
  const Precision bits = z.precision();
  Complex p(a[n], Real(bits));
  for (std::size_t k = n; k-- > 0;) {
    p *= z;
    p.real() += a[k];
  }
  return p;
}

std::vector<Disc> aberth_multiprecision(const IntPolynomial& g, Precision bits) {
  const std::size_t n = static_cast<std::size_t>(g.degree());
  std::vector<Real> a;
  a.reserve(n + 1);
  for (const auto& c : g.coeffs()) a.emplace_back(c, bits);

  if (n == 1) {
    mpq_class root(-g.coeff(0), g.coeff(1));
    root.canonicalize();
    Real value(root, bits);
    Real radius = abs(value) * pow2(-static_cast<long>(bits) + 1, bits);
    return {Disc{Complex(std::move(value), Real(bits)), std::move(radius)}};
  }

  std::vector<double> ad = to_doubles(g);
  std::vector<DComplex> start = ad.empty() ? initial_circle(1.0, n) : aberth_double(ad);
  std::vector<Complex> z;
  z.reserve(n);
  for (const auto& s : start) z.emplace_back(s.real(), s.imag(), bits);

  const Real one(1L, bits);
  const Real converged = pow2(-static_cast<long>(bits) + 24, bits);
  Complex p(bits), dp(bits);
  const int max_iter = 400;
  for (int iter = 0; iter < max_iter; ++iter) {
    Real worst(bits);
    for (std::size_t i = 0; i < n; ++i) {
      evaluate_with_derivative(a, z[i], p, dp);
      if (p.real().is_zero() && p.imag().is_zero()) continue;
      if (dp.real().is_zero() && dp.imag().is_zero()) {
        // Stationary point: nudge off it.
        z[i].real() += pow2(-20, bits);
        continue;
      }
      Complex ratio = p / dp;
      Complex sum(bits);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) sum += Complex(one, Real(bits)) / (z[i] - z[j]);
      }
      Complex denom = Complex(one, Real(bits)) - ratio * sum;
      Complex step = ratio / denom;
      z[i] -= step;
      Real rel = abs(step) / max(one, abs(z[i]));
      if (rel > worst) worst = rel;
    }
    if (worst < converged) break;
  }

  // Inclusion radii from the Weierstrass corrections, with a rounding
  // allowance on the evaluation of g.
  std::vector<Disc> discs;
  discs.reserve(n);
  const Real gamma = pow2(-static_cast<long>(bits) + 2, bits) * static_cast<long>(n + 1);
  const Real lead = abs(a[n]);
  for (std::size_t i = 0; i < n; ++i) {
    Real value_abs = abs(evaluate(a, z[i]));
    Real zabs = abs(z[i]);
    Real magnitude(bits);
    Real power(1L, bits);
    for (std::size_t k = 0; k <= n; ++k) {
      magnitude += abs(a[k]) * power;
      power *= zabs;
    }
    Real denom = lead;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) denom *= abs(z[i] - z[j]);
    }
    if (denom.is_zero()) throw Error(ErrorKind::kNumericFailure, "find_roots: coincident approximations");
    Real radius = (value_abs + gamma * magnitude) / denom * static_cast<long>(n);
    discs.push_back({z[i], std::move(radius)});
  }
  return discs;
}

void check_discs(const std::vector<Disc>& discs, Precision bits) {
  const Real limit = pow2(-static_cast<long>(bits / 2), bits);
  for (const auto& d : discs) {
    if (!(d.radius < limit)) {
      throw Error(ErrorKind::kNumericFailure,
                  "find_roots: inclusion radius " + d.radius.to_string(6) + " not below 2^-" + std::to_string(bits / 2) +
                      " at " + std::to_string(bits) + " bits");
    }
  }
  for (std::size_t i = 0; i < discs.size(); ++i) {
    for (std::size_t j = i + 1; j < discs.size(); ++j) {
      if (!(abs(discs[i].center - discs[j].center) > discs[i].radius + discs[j].radius)) {
        throw Error(ErrorKind::kNumericFailure, "find_roots: overlapping inclusion discs");
      }
    }
  }
}

}  // namespace

std::vector<RootApprox> find_roots(const IntPolynomial& f, Precision bits) {
  return find_roots(f, bits, circle_tolerance(bits));
}

std::vector<RootApprox> find_roots(const IntPolynomial& f, Precision bits, const Real& circle_tol) {
  require_nonzero(f, "find_roots");
  if (f.degree() < 1) throw Error(ErrorKind::kPrecondition, "find_roots: constant polynomial has no roots");
  if (f.constant() == 0) throw Error(ErrorKind::kPrecondition, "find_roots: a_0 = 0; strip zero roots first");

  const Real one(1L, bits);
  std::vector<RootApprox> roots;
  roots.reserve(static_cast<std::size_t>(f.degree()));
  for (const auto& [factor, multiplicity] : squarefree_decomposition(f)) {
    std::vector<Disc> discs = aberth_multiprecision(factor, bits);
    check_discs(discs, bits);
    for (auto& d : discs) {
      Real deviation = abs(abs(d.center) - one);
      ModulusClass cls = ModulusClass::kOnCircle;
      if (!(deviation <= circle_tol)) cls = abs(d.center) < one ? ModulusClass::kInside : ModulusClass::kOutside;
      roots.push_back({d.center, d.radius, cls, multiplicity});
    }
  }
  return roots;
}

MahlerResult mahler_measure(const IntPolynomial& f, Precision bits) {
  return mahler_measure(f, bits, std::nullopt);
}

MahlerResult mahler_measure(const IntPolynomial& f, Precision bits, const std::optional<Real>& circle_tol) {
  require_nonzero(f, "mahler_measure");
  auto [g, zeros] = strip_zero_roots(f);

  MahlerResult result;
  result.leading_abs = abs(f.leading());
  result.zero_root_multiplicity = zeros;
  if (g.degree() == 0) {
    result.measure = Real(result.leading_abs, bits);
    result.precision_used = bits;
    return result;
  }

  const double target = std::ldexp(1.0, -static_cast<int>(bits / 4));
  const Precision cap = std::max(bits, kMaxPrecision);
  std::string last_failure = "no attempt";
  for (Precision p = bits;; p = std::min(cap, 2 * p)) {
    try {
      std::vector<RootApprox> roots = find_roots(g, p, circle_tol ? *circle_tol : circle_tolerance(p));
      const Real one(1L, p);
      Real measure(result.leading_abs, p);
      Real drift(p);  // bound on |log M_true - log M_computed|
      long factors = 2;
      for (const auto& r : roots) {
        Real modulus = abs(r.value);
        const long m = static_cast<long>(r.multiplicity);
        factors += m;
        if (r.modulus_class == ModulusClass::kOutside) {
          for (long i = 0; i < m; ++i) measure *= modulus;
          Real term = r.radius / (modulus - r.radius);
          term *= m;
          drift += term;
        } else if (r.modulus_class == ModulusClass::kOnCircle) {
          Real term = abs(modulus - one) + r.radius;
          term *= m;
          drift += term;
        }
      }
      Real rounding = measure * pow2(-static_cast<long>(p) + 1, p) * factors;
      Real error = measure * (exp(drift) - one) + rounding;
      double err = std::nextafter(error.to_double(), std::numeric_limits<double>::infinity());
      if (err <= target) {
        result.measure = std::move(measure);
        result.error_bound = err;
        result.roots = std::move(roots);
        result.precision_used = p;
        return result;
      }
      last_failure = "error bound " + std::to_string(err) + " above target";
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kNumericFailure) throw;
      last_failure = e.what();
    }
    if (p >= cap) break;
  }
  throw Error(ErrorKind::kNumericFailure,
              "mahler_measure: precision exhausted at " + std::to_string(cap) + " bits (" + last_failure + ")");
}

// ---------------------------------------------------------------------------
// Graeffe enclosure

namespace {

std::size_t total_bits(const std::vector<mpz_class>& c) {
  std::size_t bits = 0;
  for (const auto& x : c) bits += mpz_sizeinbase(x.get_mpz_t(), 2);
  return bits;
}

// Coefficients of g(y) with g(x^2) = +-f(x) f(-x).
std::vector<mpz_class> graeffe_step(const std::vector<mpz_class>& a) {
  const std::size_t n = a.size() - 1;
  std::vector<mpz_class> out(n + 1);
  // f(x)f(-x) = E(x^2)^2 - x^2 O(x^2)^2, collected directly by index parity.
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t j = i; j <= n; ++j) {
      if ((i + j) % 2 != 0) continue;
      mpz_class term = a[i] * a[j];
      if (i != j) term *= 2;
      if (i % 2 == 1) term = -term;
      out[(i + j) / 2] += term;
    }
  }
  return out;
}

}  // namespace

Interval graeffe_measure(const IntPolynomial& f, unsigned iterations, std::size_t max_bits) {
  require_nonzero(f, "graeffe_measure");
  if (f.constant() == 0) throw Error(ErrorKind::kPrecondition, "graeffe_measure: a_0 = 0; strip zero roots first");
  if (f.degree() == 0) {
    double v = mpz_class(abs(f.leading())).get_d();
    return {v, v};
  }
  std::vector<mpz_class> c = f.coeffs();
  for (unsigned it = 0; it < iterations; ++it) {
    c = graeffe_step(c);
    if (total_bits(c) > max_bits) {
      throw Error(ErrorKind::kResourceExhausted,
                  "graeffe_measure: coefficients exceed " + std::to_string(max_bits) + " bits after " +
                      std::to_string(it + 1) + " iterations");
    }
  }

  const Precision bits = 192;
  const std::size_t n = c.size() - 1;
  Real log_lower(bits);
  bool have_lower = false;
  mpz_class sum_squares = 0;
  mpz_class binom = 1;
  for (std::size_t i = 0; i <= n; ++i) {
    if (i > 0) {
      binom *= static_cast<unsigned long>(n - i + 1);
      binom /= static_cast<unsigned long>(i);
    }
    sum_squares += c[i] * c[i];
    if (c[i] == 0) continue;
    Real candidate = log(Real(mpz_class(abs(c[i])), bits)) - log(Real(binom, bits));
    if (!have_lower || candidate > log_lower) log_lower = candidate;
    have_lower = true;
  }
  Real log_upper = log(Real(sum_squares, bits)) / 2L;

  Real scale = pow2(-static_cast<long>(iterations), bits);
  Real lo = exp(log_lower * scale);
  Real hi = exp(log_upper * scale);
  Real slack = pow2(-100, bits);
  lo -= lo * slack;
  hi += hi * slack;
  constexpr double inf = std::numeric_limits<double>::infinity();
  return {std::nextafter(lo.to_double(), -inf), std::nextafter(hi.to_double(), inf)};
}

}  // namespace mahler
