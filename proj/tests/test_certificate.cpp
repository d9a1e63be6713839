#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <numbers>

#include "mahler/certificate.hpp"
#include "mahler/error.hpp"
#include "mahler/nonreciprocal.hpp"
#include "support.hpp"

using mahler::IntPolynomial;

namespace {

IntPolynomial P(const char* text) { return mahler::parse_polynomial(text); }

const char* kCheckNames[] = {"VANISH", "QK",       "INV", "GH-RATIO", "LINK",         "EQ1",
                             "WIENER-G", "WIENER-H", "EQ2", "FINAL",    "UNIT-MODULUS", "ON-CIRCLE-EPSILON"};

std::complex<double> to_c(const mahler::Complex& z) { return {z.real().to_double(), z.imag().to_double()}; }

// A random polynomial the certificate accepts: stripped, normalized, 2k <= n.
IntPolynomial random_applicable(int max_degree, long height) {
  while (true) {
    IntPolynomial f = mahler::normalize_signs(test::random_poly(max_degree, height));
    if (mahler::theorem_bound(f).theorem_applicable) return f;
  }
}

}  // namespace

TEST_CASE("q_series examples") {
  auto q = mahler::q_series(P("x^5+x^4-x^3-x^2-x+1"), 3);
  REQUIRE(q.size() == 4);
  CHECK(q[0] == 1);
  CHECK(q[1] == -2);
  auto r = mahler::q_series(P("x^2+3x+1"), 6);
  CHECK(r[0] == 1);
  for (std::size_t i = 1; i < r.size(); ++i) CHECK(r[i] == 0);
  CHECK_THROWS_AS(mahler::q_series(P("x^2+x-1"), 3), mahler::Error);
  CHECK_THROWS_AS(mahler::q_series(P("x^2+x"), 3), mahler::Error);
}

TEST_CASE("q_series solves f = f* G modulo z^(L+1)") {
  for (int trial = 0; trial < 200; ++trial) {
    IntPolynomial f = mahler::normalize_signs(test::random_poly(10, 5));
    const std::size_t L = 20;
    auto q = mahler::q_series(f, L);
    IntPolynomial fstar = mahler::reciprocal(f);
    CHECK(q[0] == mpq_class(f.constant()) / mpq_class(f.leading()));
    for (std::size_t j = 0; j <= L; ++j) {
      mpq_class acc = 0;
      for (std::size_t i = 0; i <= j; ++i) acc += mpq_class(fstar.coeff(i)) * q[j - i];
      CHECK(acc == mpq_class(f.coeff(j)));
    }
    auto k = mahler::detect_k(f);
    if (k && *k <= L) {
      for (std::size_t i = 1; i < *k; ++i) CHECK(q[i] == 0);
      CHECK(q[*k] != 0);
    }
  }
}

TEST_CASE("inverse_series examples") {
  auto geometric = mahler::inverse_series(P("1-x"), 3);
  for (const auto& e : geometric) CHECK(e == 1);
  auto e = mahler::inverse_series(P("x+2"), 2);
  CHECK(e[0] == mpq_class(1, 2));
  CHECK(e[1] == mpq_class(-1, 4));
  CHECK(e[2] == mpq_class(1, 8));
  IntPolynomial f = P("3x^4+x-2");
  CHECK(mahler::inverse_series(mahler::reciprocal(f), 4)[0] == mpq_class(1, 3));
  CHECK_THROWS_AS(mahler::inverse_series(P("x^2+x"), 3), mahler::Error);
}

TEST_CASE("epsilon_sign") {
  CHECK(mahler::epsilon_sign(P("x^5+x^4-x^3-x^2-x+1")) == -1);
  CHECK(mahler::epsilon_sign(P("x^3-x-1")) == 1);
  CHECK(mahler::epsilon_sign(P("x^2-2x+1")) == 1);
}

TEST_CASE("Blaschke split of simple inputs") {
  auto s = mahler::blaschke_split(P("x^2+x+1"), 128, 5);
  CHECK(s.epsilon == 1);
  CHECK(std::abs(to_c(s.b[0]) - 1.0) < 1e-30);
  CHECK(std::abs(to_c(s.c[0]) - 1.0) < 1e-30);
  for (std::size_t i = 1; i <= 5; ++i) {
    CHECK(std::abs(to_c(s.b[i])) < 1e-30);
    CHECK(std::abs(to_c(s.c[i])) < 1e-30);
  }
  auto golden = mahler::blaschke_split(P("x^2+x-1"), 128, 8);
  CHECK(golden.c[0].real().to_double() == doctest::Approx(0.6180339887498949).epsilon(1e-14));
  CHECK(std::abs(golden.c[0].imag().to_double()) < 1e-30);
}

TEST_CASE("Blaschke series match Fourier coefficients of the products") {
  constexpr int N = 256;
  int compared = 0;
  for (int trial = 0; trial < 60 && compared < 15; ++trial) {
    IntPolynomial f = test::random_poly(8, 3);
    auto m = mahler::mahler_measure(f);
    double gap = 1.0;
    for (const auto& r : m.roots) {
      if (r.modulus_class != mahler::ModulusClass::kOnCircle) gap = std::min(gap, std::abs(abs(r.value).to_double() - 1.0));
    }
    if (gap < 0.15) continue;
    ++compared;
    const std::size_t L = 12;
    auto s = mahler::blaschke_split(f, 128, L);
    std::vector<std::complex<double>> bg(L + 1), ch(L + 1);
    for (int m_ = 0; m_ < N; ++m_) {
      const double theta = 2 * std::numbers::pi * m_ / N;
      mahler::Complex z(mahler::Real(std::cos(theta), 128), mahler::Real(std::sin(theta), 128));
      auto g = to_c(mahler::evaluate_g(s, z));
      auto h = to_c(mahler::evaluate_h(s, z));
      for (std::size_t j = 0; j <= L; ++j) {
        auto w = std::polar(1.0, -theta * static_cast<double>(j)) / static_cast<double>(N);
        bg[j] += g * w;
        ch[j] += h * w;
      }
    }
    CAPTURE(mahler::to_dense_string(f));
    for (std::size_t j = 0; j <= L; ++j) {
      CHECK(std::abs(bg[j] - to_c(s.b[j])) < 1e-9);
      CHECK(std::abs(ch[j] - to_c(s.c[j])) < 1e-9);
    }
  }
  CHECK(compared >= 5);
}

TEST_CASE("certificate of the sharp golden instance") {
  auto cert = mahler::build_certificate(P("x^5+x^4-x^3-x^2-x+1"), std::nullopt);
  CHECK(cert.all_passed());
  CHECK(cert.k == 1);
  CHECK(cert.truncation == 16);
  CHECK(cert.q[0] == 1);
  CHECK(cert.e[0] == 1);
  CHECK(cert.epsilon == -1);
  for (const char* name : kCheckNames) {
    CAPTURE(name);
    const auto* check = cert.find(name);
    REQUIRE(check != nullptr);
    CHECK(check->passed);
  }
  const double phi = (1 + std::sqrt(5.0)) / 2;
  CHECK(cert.c[0].real().to_double() == doctest::Approx(1 / phi).epsilon(1e-14));
  CHECK(std::abs(cert.c[0].real().to_double() * cert.q[1].get_d()) == doctest::Approx(2 / phi).epsilon(1e-14));
  CHECK(std::abs(*cert.find("FINAL")->slack) < 1e-20);
  CHECK(cert.find("FINAL")->slack.has_value());
}

TEST_CASE("certificate of the normalized Smyth polynomial") {
  IntPolynomial g = mahler::normalize_signs(P("x^3-x-1"));
  CHECK(g == P("x^4-x^3-x^2+1"));
  auto cert = mahler::build_certificate(g, 8);
  CHECK(cert.all_passed());
  CHECK(cert.truncation == 8);
  CHECK(cert.c[0].real().to_double() == doctest::Approx(1 / 1.3247179572447460).epsilon(1e-14));
}

TEST_CASE("certificate preconditions") {
  CHECK_THROWS_AS(mahler::build_certificate(P("x^2+3x+1"), std::nullopt), mahler::Error);
  try {
    mahler::build_certificate(P("x^2+3x+1"), std::nullopt);
  } catch (const mahler::Error& e) {
    CHECK(e.kind() == mahler::ErrorKind::kNotApplicable);
  }
  try {
    mahler::build_certificate(P("x^3-x-1"), std::nullopt);
  } catch (const mahler::Error& e) {
    CHECK(e.kind() == mahler::ErrorKind::kPrecondition);
  }
  CHECK_THROWS_AS(mahler::build_certificate(P("x^4+x^3+x^2+2x+1"), 0), mahler::Error);
  CHECK_THROWS_AS(mahler::build_certificate(P("2x^3+2x^2+x+1"), std::nullopt), mahler::Error);
}

TEST_CASE("random certificates pass every check") {
  for (int trial = 0; trial < 60; ++trial) {
    IntPolynomial f = random_applicable(10, 3);
    auto cert = mahler::build_certificate(f, std::nullopt);
    CAPTURE(mahler::to_dense_string(f));
    CHECK(cert.checks.size() == std::size(kCheckNames));
    for (const auto& check : cert.checks) {
      CAPTURE(check.name);
      CAPTURE(check.residual);
      CHECK(check.passed);
    }
  }
}

TEST_CASE("corrupted series are caught") {
  IntPolynomial f = P("x^5+x^4-x^3-x^2-x+1");
  auto split = mahler::blaschke_split(f, 128, 4);
  // A series that is unimodular-looking but wrong fails the ratio identity.
  auto q = mahler::q_series(f, 4);
  mahler::Complex acc(128);
  for (std::size_t j = 0; j <= 1; ++j) acc += split.c[j] * mahler::Real(q[1 - j], 128);
  CHECK(abs(split.b[1] - acc).to_double() < 1e-30);
  mahler::Complex wrong = split.b[1];
  wrong.real() += mahler::Real(1e-6, 128);
  CHECK(abs(wrong - acc).to_double() > 1e-7);
}
