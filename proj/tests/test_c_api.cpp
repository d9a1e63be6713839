#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>

#include "json.hpp"
#include "mahler/mahler.h"

using nlohmann::json;

namespace {

struct Poly {
  explicit Poly(const char* text) { status = mahler_poly_parse(text, &handle); }
  ~Poly() { mahler_poly_free(handle); }
  Poly(const Poly&) = delete;
  Poly& operator=(const Poly&) = delete;
  mahler_poly* handle = nullptr;
  mahler_status status;
};

json take(char* s) {
  REQUIRE(s != nullptr);
  json j = json::parse(s);
  mahler_string_free(s);
  return j;
}

}  // namespace

TEST_CASE("parse, render and free") {
  Poly p("x^3-x-1");
  REQUIRE(p.status == MAHLER_OK);
  CHECK(mahler_poly_degree(p.handle) == 3);
  char* dense = mahler_poly_to_dense(p.handle);
  CHECK(std::string(dense) == "-1,-1,0,1");
  mahler_string_free(dense);

  Poly bad("x^^2");
  CHECK(bad.status == MAHLER_ERROR_INVALID_INPUT);
  CHECK(bad.handle == nullptr);
  CHECK(std::strlen(mahler_last_error()) > 0);

  const int64_t coeffs[] = {1, 0, -1, 1};
  mahler_poly* q = nullptr;
  REQUIRE(mahler_poly_from_coeffs(coeffs, 4, &q) == MAHLER_OK);
  CHECK(mahler_poly_degree(q) == 3);
  mahler_poly_free(q);
  CHECK(mahler_poly_degree(nullptr) == -1);
  CHECK(mahler_poly_parse(nullptr, &q) == MAHLER_ERROR_INVALID_INPUT);
  CHECK(std::string(mahler_status_name(MAHLER_VIOLATION_FOUND)) == "violation_found");
  CHECK(std::strlen(mahler_version()) > 0);
}

TEST_CASE("measure") {
  Poly lehmer("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1");
  double m = 0, err = 1;
  REQUIRE(mahler_measure(lehmer.handle, 0, &m, &err) == MAHLER_OK);
  CHECK(std::abs(m - 1.1762808182599175) < 1e-12);
  CHECK(err < 1e-20);
  char* out = nullptr;
  REQUIRE(mahler_measure_json(lehmer.handle, 128, &out) == MAHLER_OK);
  json j = take(out);
  CHECK(j["root_counts"]["on_circle"] == 8);
  CHECK(j["degree"] == 10);

  Poly zero("0");
  CHECK(mahler_measure(zero.handle, 0, &m, nullptr) == MAHLER_ERROR_INVALID_INPUT);
}

TEST_CASE("bound strips zero roots") {
  Poly p("x^7+x^6-x^5-x^4-x^3+x^2");
  char* out = nullptr;
  REQUIRE(mahler_bound_json(p.handle, 0, &out) == MAHLER_OK);
  json j = take(out);
  CHECK(j["checked_polynomial"] == "1,-1,-1,-1,1,1");
  CHECK(j["k"] == 1);
  CHECK(j["alpha"] == 2);
  CHECK(j["triviality"] == "nontrivial");
  CHECK(std::abs(j["bound_value"].get<double>() - 1.6180339887498949) < 1e-14);
}

TEST_CASE("certify normalizes and reports checks") {
  Poly smyth("x^3-x-1");
  char* out = nullptr;
  REQUIRE(mahler_certify_json(smyth.handle, 0, 0, &out) == MAHLER_OK);
  json j = take(out);
  CHECK(j["certified_polynomial"] == "1,0,-1,-1,1");
  CHECK(j["all_passed"] == true);
  CHECK(j["checks"].size() == 12);
  CHECK(j["truncation"] == 16);

  Poly pal("x^2+3x+1");
  CHECK(mahler_certify_json(pal.handle, 0, 0, &out) == MAHLER_ERROR_INVALID_INPUT);
}

TEST_CASE("family") {
  char* out = nullptr;
  REQUIRE(mahler_family_json("2", "3", "-2", 1, 5, 0, &out) == MAHLER_OK);
  json j = take(out);
  CHECK(j["closed_form"] == 4.0);
  CHECK(j["max_discrepancy"].get<double>() < 1e-12);
  CHECK(j["coefficients"] == "2,-3,-2,-2,3,2");
  CHECK(mahler_family_json("1", "1", "-1", 2, 6, 0, &out) == MAHLER_ERROR_INVALID_INPUT);
  CHECK(std::string(mahler_last_error()).find("n != 3k") != std::string::npos);
  CHECK(mahler_family_json("x", "1", "-1", 1, 5, 0, &out) == MAHLER_ERROR_INVALID_INPUT);
}

TEST_CASE("scan, survey and corpus") {
  mahler_scan_config* c = mahler_scan_config_new();
  REQUIRE(c != nullptr);
  CHECK(mahler_scan_config_set_box(c, 3, 1, 1) == MAHLER_ERROR_INVALID_INPUT);
  REQUIRE(mahler_scan_config_set_box(c, 1, 4, 1) == MAHLER_OK);
  mahler_scan_config_set_workers(c, 2);
  char* out = nullptr;
  char* csv = nullptr;
  REQUIRE(mahler_scan_json(c, &out, &csv) == MAHLER_OK);
  json j = take(out);
  CHECK(j["total_enumerated"] == 2 + 6 + 18 + 54);
  CHECK(j["violation_list"].empty());
  CHECK(j["config"]["worker_count"] == 2);
  REQUIRE(csv != nullptr);
  CHECK(std::string(csv).rfind("bin_lo,bin_hi,count", 0) == 0);
  mahler_string_free(csv);

  CHECK(mahler_survey_json(c, &out, nullptr) == MAHLER_ERROR_INVALID_INPUT);
  mahler_scan_config_set_filters(c, 1, 1, -1);
  REQUIRE(mahler_survey_json(c, &out, nullptr) == MAHLER_OK);
  json s = take(out);
  CHECK(s.contains("min_gap_odd_alpha"));

  Poly a("x^3-x-1"), b("x^2+x+1");
  const mahler_poly* list[] = {a.handle, b.handle};
  mahler_scan_config_set_filters(c, 0, 0, -1);
  REQUIRE(mahler_scan_corpus_json(c, list, 2, &out, nullptr) == MAHLER_OK);
  json corpus = take(out);
  CHECK(corpus["total_enumerated"] == 2);
  CHECK(corpus["checked_count"] == 1);
  mahler_scan_config_free(c);
}
