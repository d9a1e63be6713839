#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "mahler/error.hpp"
#include "mahler/measure.hpp"
#include "mahler/nonreciprocal.hpp"
#include "mahler/sharp_family.hpp"

using mahler::ExpansionCase;
using mahler::IntPolynomial;
using mahler::SharpFamilyParams;

namespace {

IntPolynomial P(const char* text) { return mahler::parse_polynomial(text); }

std::string validation_message(const SharpFamilyParams& p) {
  try {
    mahler::validate(p);
  } catch (const mahler::Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("construct examples") {
  CHECK(mahler::construct({1, 1, -1, 1, 5}) == P("x^5+x^4-x^3-x^2-x+1"));
  CHECK(mahler::expansion_case({1, 1, -1, 1, 5}) == ExpansionCase::kAboveFourK);
  CHECK(mahler::construct({1, 1, -1, 1, 4}) == P("1,-1,-2,1,1"));
  CHECK(mahler::expansion_case({1, 1, -1, 1, 4}) == ExpansionCase::kFourK);
  CHECK(mahler::construct({2, 3, -2, 1, 5}) == P("2x^5+3x^4-2x^3-2x^2-3x+2"));
  CHECK(mahler::expansion_case({1, 1, -1, 2, 7}) == ExpansionCase::kBetweenThreeAndFourK);
  CHECK(mahler::expansion_case({1, 1, -1, 2, 5}) == ExpansionCase::kBetweenTwoAndThreeK);
  CHECK(mahler::construct({1, 1, -1, 2, 7}) == P("x^7+x^5-x^4-x^3-x^2+1"));
  CHECK(mahler::construct({1, 1, -1, 2, 5}) == P("x^5-x^4+x^3-x^2-x+1"));
}

TEST_CASE("validation names the failed inequality") {
  CHECK(validation_message({0, 1, -1, 1, 5}).find("a > 0") != std::string::npos);
  CHECK(validation_message({1, 1, 1, 1, 5}).find("c < 0") != std::string::npos);
  CHECK(validation_message({4, 1, -1, 1, 5}).find("a - |b| <= -c") != std::string::npos);
  CHECK(validation_message({1, 1, -4, 1, 5}).find("-c <= a + |b|") != std::string::npos);
  CHECK(validation_message({1, 1, -1, 2, 4}).find("n > 2k") != std::string::npos);
  CHECK(validation_message({1, 1, -1, 2, 6}).find("n != 3k") != std::string::npos);
  CHECK(validation_message({1, 1, -1, 0, 6}).find("k >= 1") != std::string::npos);
  CHECK(validation_message({1, 1, -1, 1, 5}).empty());
  CHECK_THROWS_AS(mahler::construct({1, 1, -1, 1, 3}), mahler::Error);
}

TEST_CASE("closed form") {
  CHECK(mahler::closed_form_measure(1, 1, -1).to_double() == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-15));
  CHECK(mahler::closed_form_measure(2, 3, -2).to_double() == 4.0);
  CHECK(mahler::closed_form_measure(1, 0, -1).to_double() == 1.0);
  CHECK(mahler::closed_form_measure(3, 2, -2).to_double() == doctest::Approx(1 + std::sqrt(7.0)).epsilon(1e-15));
  CHECK_THROWS_AS(mahler::closed_form_measure(1, 0, -3), mahler::Error);
}

TEST_CASE("verify_sharpness examples") {
  auto golden = mahler::verify_sharpness({1, 1, -1, 1, 5});
  CHECK(golden.agrees());
  CHECK(golden.max_discrepancy < 1e-12);
  CHECK(golden.bound.to_double() == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-15));
  auto four = mahler::verify_sharpness({2, 3, -2, 1, 5});
  CHECK(four.agrees());
  CHECK(four.alpha == 12);
  CHECK(four.closed_form.to_double() == 4.0);
  CHECK(four.numeric_measure.to_double() == doctest::Approx(4.0).epsilon(1e-15));
  auto seven = mahler::verify_sharpness({3, 2, -2, 1, 7});
  CHECK(seven.agrees());
  CHECK(seven.bound.to_double() == doctest::Approx(1 + std::sqrt(7.0)).epsilon(1e-15));
}

TEST_CASE("b = 0 members are reciprocal and reported not applicable") {
  for (std::size_t k = 1; k <= 2; ++k) {
    auto r = mahler::verify_sharpness({2, 0, -2, k, 4 * k});
    CHECK(mahler::is_reciprocal(r.polynomial));
    CHECK_FALSE(r.applicable);
    CHECK_FALSE(r.agrees());
  }
}

TEST_CASE("sampling grid covers every case and is sharp") {
  auto grid = mahler::sampling_grid();
  std::set<ExpansionCase> cases;
  std::size_t checked = 0;
  for (const auto& p : grid) {
    cases.insert(mahler::expansion_case(p));
    CAPTURE(p.a.get_si());
    CAPTURE(p.b.get_si());
    CAPTURE(p.c.get_si());
    CAPTURE(p.k);
    CAPTURE(p.n);
    auto r = mahler::verify_sharpness(p);
    CHECK(r.polynomial.degree() == static_cast<int>(p.n));
    if (p.b == 0) {
      CHECK_FALSE(r.applicable);
      continue;
    }
    ++checked;
    CHECK(r.agrees());
    CHECK(r.max_discrepancy < 1e-9);
    CHECK(r.exact_identity);
    CHECK(mahler::detect_k(r.polynomial) == p.k);
    CHECK(mahler::compute_alpha(r.polynomial, p.k) == abs(p.b * (p.a - p.c)));
  }
  CHECK(cases.size() == 4);
  CHECK(checked > 100);
  CHECK(mahler::sampling_grid(false).size() == checked);
}

TEST_CASE("root moduli split as predicted") {
  for (const auto& p : mahler::sampling_grid(false)) {
    const double a = p.a.get_d(), b = std::abs(p.b.get_d()), c = p.c.get_d();
    const double disc = std::sqrt(b * b - 4 * a * c);
    const double k = static_cast<double>(p.k);
    const double big = std::pow((b + disc) / (2 * a), 1 / k);
    const double small = std::pow((disc - b) / (2 * a), 1 / k);
    auto m = mahler::mahler_measure(mahler::construct(p));
    std::size_t near_big = 0, near_small = 0, near_one = 0;
    for (const auto& r : m.roots) {
      const double mod = abs(r.value).to_double();
      const std::size_t mult = r.multiplicity;
      bool matched = false;
      if (std::abs(mod - big) < 1e-12) {
        CHECK(r.modulus_class != mahler::ModulusClass::kInside);
        near_big += mult;
        matched = true;
      }
      if (!matched && std::abs(mod - small) < 1e-12) {
        CHECK(r.modulus_class != mahler::ModulusClass::kOutside);
        near_small += mult;
        matched = true;
      }
      if (!matched && std::abs(mod - 1.0) < 1e-12) near_one += mult;
    }
    // When big or small is 1 those roots land in near_one instead.
    CHECK(near_big + near_small + near_one == p.n);
    CHECK(near_big >= (std::abs(big - 1) < 1e-12 ? 0 : p.k));
    CHECK(near_small >= (std::abs(small - 1) < 1e-12 ? 0 : p.k));
  }
}

TEST_CASE("unit-endpoint members have even alpha") {
  for (const auto& p : mahler::sampling_grid(false)) {
    if (p.a != 1 || p.c != -1) continue;
    auto profile = mahler::theorem_bound(mahler::construct(p));
    REQUIRE(profile.alpha.has_value());
    CHECK(*profile.alpha == 2 * abs(p.b));
    CHECK(*profile.alpha % 2 == 0);
  }
}
