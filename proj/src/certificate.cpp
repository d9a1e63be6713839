#include "mahler/certificate.hpp"

#include <algorithm>
#include <cmath>

#include "mahler/error.hpp"
#include "mahler/nonreciprocal.hpp"

namespace mahler {

std::vector<mpq_class> q_series(const IntPolynomial& f, std::size_t truncation) {
  require_nonzero(f, "q_series");
  if (f.constant() == 0) throw Error(ErrorKind::kPrecondition, "q_series: a_0 = 0; strip zero roots first");
  if (f.constant() * f.leading() <= 0) {
    throw Error(ErrorKind::kPrecondition, "q_series: a_0 a_n must be positive; apply normalize_signs first");
  }
  const std::size_t n = static_cast<std::size_t>(f.degree());
  const IntPolynomial fstar = reciprocal(f);
  const mpq_class an(f.leading());
  std::vector<mpq_class> q(truncation + 1);
  q[0] = mpq_class(f.constant(), f.leading());
  q[0].canonicalize();
  // a_n q_j = (a_j - q_0 d_j) - sum_{i=1}^{j-1} d_i q_{j-i}
  for (std::size_t j = 1; j <= truncation; ++j) {
    mpq_class acc = mpq_class(f.coeff(j)) - q[0] * mpq_class(fstar.coeff(j));
    for (std::size_t i = 1; i < j && i <= n; ++i) acc -= mpq_class(fstar.coeff(i)) * q[j - i];
    q[j] = acc / an;
  }
  return q;
}

std::vector<mpq_class> inverse_series(const IntPolynomial& fstar, std::size_t truncation) {
  require_nonzero(fstar, "inverse_series");
  if (fstar.constant() == 0) throw Error(ErrorKind::kPrecondition, "inverse_series: constant term is zero");
  const std::size_t n = static_cast<std::size_t>(fstar.degree());
  const mpq_class d0(fstar.constant());
  std::vector<mpq_class> e(truncation + 1);
  e[0] = 1 / d0;
  for (std::size_t j = 1; j <= truncation; ++j) {
    mpq_class acc = 0;
    for (std::size_t i = 1; i <= j && i <= n; ++i) acc += mpq_class(fstar.coeff(i)) * e[j - i];
    e[j] = -acc / d0;
  }
  return e;
}

int epsilon_sign(const IntPolynomial& f) { return multiplicity_at_one(f) % 2 == 1 ? -1 : 1; }

namespace {

using Series = std::vector<Complex>;

Series series_one(std::size_t truncation, Precision bits) {
  Series s(truncation + 1, Complex(bits));
  s[0].real() = Real(1L, bits);
  return s;
}

Series multiply_truncated(const Series& x, const Series& y) {
  const Precision bits = x[0].precision();
  Series out(x.size(), Complex(bits));
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; i + j < x.size(); ++j) out[i + j] += x[i] * y[j];
  }
  return out;
}

// (z - a)/(1 - conj(a) z) = -a + sum_{j>=1} conj(a)^{j-1} (1 - |a|^2) z^j
Series inside_factor(const Complex& a, std::size_t truncation) {
  const Precision bits = a.precision();
  Series s(truncation + 1, Complex(bits));
  s[0] = -a;
  const Real shrink = Real(1L, bits) - norm(a);
  Complex power(Real(1L, bits), Real(bits));
  const Complex abar = conj(a);
  for (std::size_t j = 1; j <= truncation; ++j) {
    s[j] = power * shrink;
    power *= abar;
  }
  return s;
}

// (1 - conj(a) z)/(z - a) = -1/a + sum_{j>=1} (conj(a) a^{-j} - a^{-j-1}) z^j
Series outside_factor(const Complex& a, std::size_t truncation) {
  const Precision bits = a.precision();
  Series s(truncation + 1, Complex(bits));
  const Complex inv = Complex(Real(1L, bits), Real(bits)) / a;
  const Complex abar = conj(a);
  Complex power = inv;  // a^{-j}
  s[0] = -inv;
  for (std::size_t j = 1; j <= truncation; ++j) {
    Complex next = power * inv;
    s[j] = abar * power - next;
    power = std::move(next);
  }
  return s;
}

double to_d(const Real& x) { return x.to_double(); }

}  // namespace

BlaschkeSplit blaschke_split(const IntPolynomial& f, Precision bits, std::size_t truncation) {
  require_nonzero(f, "blaschke_split");
  if (f.constant() == 0) throw Error(ErrorKind::kPrecondition, "blaschke_split: a_0 = 0; strip zero roots first");
  BlaschkeSplit split;
  split.measure = mahler_measure(f, bits);
  const Precision p = split.measure.precision_used;
  split.epsilon = epsilon_sign(f);
  split.b = series_one(truncation, p);
  split.c = series_one(truncation, p);
  split.on_circle_product = Complex(Real(1L, p), Real(p));
  for (const auto& root : split.measure.roots) {
    for (std::size_t m = 0; m < root.multiplicity; ++m) {
      switch (root.modulus_class) {
        case ModulusClass::kInside:
          split.b = multiply_truncated(split.b, inside_factor(root.value, truncation));
          break;
        case ModulusClass::kOutside:
          split.c = multiply_truncated(split.c, outside_factor(root.value, truncation));
          break;
        case ModulusClass::kOnCircle:
          split.on_circle_product *= -root.value;
          break;
      }
    }
  }
  if (split.epsilon < 0) {
    for (auto& x : split.b) x = -x;
  }
  if (split.c[0].real().sign() < 0) {
    split.normalization = -1;
    for (auto& x : split.b) x = -x;
    for (auto& x : split.c) x = -x;
  }
  return split;
}

Complex evaluate_g(const BlaschkeSplit& split, const Complex& z) {
  const Precision p = split.measure.precision_used;
  Complex acc(Real(static_cast<long>(split.epsilon * split.normalization), p), Real(p));
  const Complex one(Real(1L, p), Real(p));
  for (const auto& root : split.measure.roots) {
    if (root.modulus_class != ModulusClass::kInside) continue;
    const Complex factor = (z - root.value) / (one - conj(root.value) * z);
    for (std::size_t m = 0; m < root.multiplicity; ++m) acc *= factor;
  }
  return acc;
}

Complex evaluate_h(const BlaschkeSplit& split, const Complex& z) {
  const Precision p = split.measure.precision_used;
  Complex acc(Real(static_cast<long>(split.normalization), p), Real(p));
  const Complex one(Real(1L, p), Real(p));
  for (const auto& root : split.measure.roots) {
    if (root.modulus_class != ModulusClass::kOutside) continue;
    const Complex factor = (one - conj(root.value) * z) / (z - root.value);
    for (std::size_t m = 0; m < root.multiplicity; ++m) acc *= factor;
  }
  return acc;
}

bool Certificate::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult* Certificate::find(std::string_view name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::size_t default_truncation(std::size_t k) { return std::max<std::size_t>(2 * k, 16); }

Certificate build_certificate(const IntPolynomial& f, std::optional<std::size_t> truncation, Precision bits) {
  require_nonzero(f, "build_certificate");
  if (f.constant() <= 0 || f.leading() <= 0) {
    throw Error(ErrorKind::kPrecondition,
                "build_certificate: endpoints must be positive; apply normalize_signs first");
  }
  const NonreciprocalProfile profile = theorem_bound(f, bits);
  if (!profile.theorem_applicable) {
    throw Error(ErrorKind::kNotApplicable, "build_certificate: polynomial is not k-nonreciprocal with 2k <= n");
  }
  const std::size_t k = *profile.k;
  const std::size_t n = profile.degree;
  const std::size_t L = truncation.value_or(default_truncation(k));
  if (L < k) throw Error(ErrorKind::kInvalidInput, "build_certificate: truncation must be at least k");

  Certificate cert;
  cert.truncation = L;
  cert.k = k;
  cert.q = q_series(f, L);
  const IntPolynomial fstar = reciprocal(f);
  cert.e = inverse_series(fstar, L);
  cert.epsilon = epsilon_sign(f);

  BlaschkeSplit split = blaschke_split(f, bits, L);
  const Precision p = split.measure.precision_used;
  cert.precision = p;
  cert.normalization = split.normalization;
  cert.measure = split.measure.measure;
  cert.measure_error = split.measure.error_bound;
  const double tol = std::ldexp(1.0, -static_cast<int>(bits / 4)) * static_cast<double>(L);
  cert.tolerance = tol;

  auto exact_check = [&](std::string name, bool ok, double residual) {
    cert.checks.push_back({std::move(name), ok, residual, 0.0, std::nullopt});
  };
  auto approx_check = [&](std::string name, double residual) {
    cert.checks.push_back({std::move(name), residual <= tol, residual, tol, std::nullopt});
  };
  // lhs <= rhs + tol
  auto inequality_check = [&](std::string name, double slack) {
    cert.checks.push_back({std::move(name), slack >= -tol, std::max(0.0, -slack), tol, slack});
  };

  // VANISH
  {
    bool ok = cert.q[k] != 0;
    double residual = 0.0;
    for (std::size_t i = 1; i < k; ++i) {
      if (cert.q[i] != 0) ok = false;
      residual = std::max(residual, std::abs(cert.q[i].get_d()));
    }
    if (cert.q[k] == 0) residual = std::max(residual, 1.0);
    exact_check("VANISH", ok, residual);
  }
  // QK
  const mpq_class an(f.leading());
  const mpq_class a0(f.constant());
  const mpq_class expected_qk = mpq_class(f.coeff(k)) / an - a0 * mpq_class(f.coeff(n - k)) / (an * an);
  {
    mpq_class diff = cert.q[k] - expected_qk;
    exact_check("QK", diff == 0, std::abs(diff.get_d()));
  }
  // INV
  {
    double residual = 0.0;
    bool ok = true;
    for (std::size_t j = 0; j <= L; ++j) {
      mpq_class acc = 0;
      for (std::size_t i = 0; i <= j; ++i) acc += mpq_class(fstar.coeff(i)) * cert.e[j - i];
      mpq_class diff = acc - (j == 0 ? 1 : 0);
      if (diff != 0) ok = false;
      residual = std::max(residual, std::abs(diff.get_d()));
    }
    exact_check("INV", ok, residual);
  }

  const std::vector<Complex>& b = split.b;
  const std::vector<Complex>& c = split.c;
  std::vector<Real> q_real;
  q_real.reserve(L + 1);
  for (const auto& x : cert.q) q_real.emplace_back(x, p);

  // GH-RATIO: b_i = sum_{j<=i} c_j q_{i-j}
  {
    Real worst(p);
    for (std::size_t i = 0; i <= L; ++i) {
      Complex acc(p);
      for (std::size_t j = 0; j <= i; ++j) acc += c[j] * q_real[i - j];
      Real r = abs(b[i] - acc);
      if (r > worst) worst = r;
    }
    approx_check("GH-RATIO", to_d(worst));
  }
  // LINK
  {
    Real worst(p);
    for (std::size_t i = 0; i < k; ++i) {
      Real r = abs(b[i] - c[i] * q_real[0]);
      if (r > worst) worst = r;
    }
    Real r = abs(b[k] - (c[0] * q_real[k] + c[k] * q_real[0]));
    if (r > worst) worst = r;
    approx_check("LINK", to_d(worst));
  }
  const Real measure = split.measure.measure;
  const Real one(1L, p);
  // EQ1: c_0 = |a_n| / M(f)
  {
    Complex expected(Real(mpz_class(abs(f.leading())), p) / measure, Real(p));
    approx_check("EQ1", to_d(abs(c[0] - expected)));
  }
  // WIENER-G / WIENER-H: |gamma_i| <= 1 - |gamma_0|^2
  auto wiener = [&](const char* name, const std::vector<Complex>& s) {
    Real cap = one - norm(s[0]);
    Real slack = cap;
    for (std::size_t i = 1; i <= L; ++i) {
      Real room = cap - abs(s[i]);
      if (room < slack) slack = room;
    }
    inequality_check(name, to_d(slack));
  };
  wiener("WIENER-G", b);
  wiener("WIENER-H", c);
  // EQ2: |c_0 q_k| <= |b_k| + |c_k| q_0
  {
    Real lhs = abs(c[0] * q_real[k]);
    Real rhs = abs(b[k]) + abs(c[k]) * q_real[0];
    inequality_check("EQ2", to_d(rhs - lhs));
  }
  // FINAL: M |a_k - a_0 a_{n-k}/a_n| <= (q_0 + 1)(M^2 - a_0 a_n)
  {
    Real discrepancy = abs(Real(mpq_class(mpq_class(f.coeff(k)) - a0 * mpq_class(f.coeff(n - k)) / an), p));
    Real lhs = measure * discrepancy;
    Real rhs = (q_real[0] + one) * (measure * measure - Real(mpz_class(f.constant() * f.leading()), p));
    inequality_check("FINAL", to_d(rhs - lhs));
  }
  // UNIT-MODULUS: |g| = |h| = 1 at 64 points of the circle
  {
    Real worst(p);
    const Real two_pi = pi(p) * 2L;
    for (long j = 0; j < 64; ++j) {
      Real theta = two_pi * j / 64L;
      Complex z(cos(theta), sin(theta));
      Real rg = abs(abs(evaluate_g(split, z)) - one);
      Real rh = abs(abs(evaluate_h(split, z)) - one);
      if (rg > worst) worst = rg;
      if (rh > worst) worst = rh;
    }
    approx_check("UNIT-MODULUS", to_d(worst));
  }
  // ON-CIRCLE-EPSILON: prod over unit-circle roots of (-alpha) equals eps
  {
    Complex eps(Real(static_cast<long>(cert.epsilon), p), Real(p));
    approx_check("ON-CIRCLE-EPSILON", to_d(abs(split.on_circle_product - eps)));
  }

  cert.epsilon = split.epsilon;
  cert.b = std::move(split.b);
  cert.c = std::move(split.c);
  return cert;
}

}  // namespace mahler
