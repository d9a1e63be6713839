#include "mahler/mahler.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "mahler/error.hpp"
#include "mahler/json_report.hpp"

struct mahler_poly {
  mahler::IntPolynomial value;
};

struct mahler_scan_config {
  mahler::ScanConfig value;
};

namespace {

thread_local std::string last_error;

mahler::Precision bits_or_default(unsigned bits) {
  return bits == 0 ? mahler::kDefaultPrecision : static_cast<mahler::Precision>(bits);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

mahler_status fail(mahler_status status, const char* message) {
  last_error = message;
  return status;
}

// Runs body(), translating exceptions into status codes.
template <typename Body>
mahler_status guarded(Body body) {
  try {
    last_error.clear();
    return body();
  } catch (const mahler::Error& e) {
    switch (e.kind()) {
      case mahler::ErrorKind::kInvalidInput:
      case mahler::ErrorKind::kPrecondition:
      case mahler::ErrorKind::kNotApplicable:
        return fail(MAHLER_ERROR_INVALID_INPUT, e.what());
      case mahler::ErrorKind::kNumericFailure:
      case mahler::ErrorKind::kResourceExhausted:
        return fail(MAHLER_ERROR_NUMERIC, e.what());
    }
    return fail(MAHLER_ERROR_INTERNAL, e.what());
  } catch (const std::exception& e) {
    return fail(MAHLER_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(MAHLER_ERROR_INTERNAL, "unknown exception");
  }
}

mahler_status emit(const nlohmann::json& payload, char** json) {
  *json = copy_string(payload.dump());
  return MAHLER_OK;
}

mahler_status check_out(const void* p) {
  return p == nullptr ? fail(MAHLER_ERROR_INVALID_INPUT, "null argument") : MAHLER_OK;
}

mahler::IntPolynomial stripped(const mahler::IntPolynomial& f) {
  mahler::require_nonzero(f, "strip_zero_roots");
  auto [g, zeros] = mahler::strip_zero_roots(f);
  return g;
}

}  // namespace

extern "C" {

const char* mahler_version(void) { return "1.0.0"; }

const char* mahler_last_error(void) { return last_error.c_str(); }

const char* mahler_status_name(mahler_status status) {
  switch (status) {
    case MAHLER_OK:
      return "ok";
    case MAHLER_ERROR_INTERNAL:
      return "internal_error";
    case MAHLER_ERROR_INVALID_INPUT:
      return "invalid_input";
    case MAHLER_ERROR_NUMERIC:
      return "numeric_failure";
    case MAHLER_VIOLATION_FOUND:
      return "violation_found";
  }
  return "unknown";
}

void mahler_string_free(char* str) { std::free(str); }

mahler_status mahler_poly_parse(const char* text, mahler_poly** out) {
  if (text == nullptr || out == nullptr) return check_out(nullptr);
  return guarded([&] {
    *out = new mahler_poly{mahler::parse_polynomial(text)};
    return MAHLER_OK;
  });
}

mahler_status mahler_poly_from_coeffs(const int64_t* coeffs, size_t count, mahler_poly** out) {
  if ((coeffs == nullptr && count > 0) || out == nullptr) return check_out(nullptr);
  return guarded([&] {
    std::vector<mpz_class> c(count);
    for (size_t i = 0; i < count; ++i) c[i] = static_cast<long>(coeffs[i]);
    *out = new mahler_poly{mahler::IntPolynomial(std::move(c))};
    return MAHLER_OK;
  });
}

void mahler_poly_free(mahler_poly* poly) { delete poly; }

int mahler_poly_degree(const mahler_poly* poly) { return poly == nullptr ? -1 : poly->value.degree(); }

char* mahler_poly_to_dense(const mahler_poly* poly) {
  if (poly == nullptr) return nullptr;
  try {
    return copy_string(mahler::to_dense_string(poly->value));
  } catch (...) {
    return nullptr;
  }
}

mahler_status mahler_measure(const mahler_poly* poly, unsigned precision_bits, double* measure, double* error_bound) {
  if (poly == nullptr || measure == nullptr) return check_out(nullptr);
  return guarded([&] {
    mahler::MahlerResult r = mahler::mahler_measure(poly->value, bits_or_default(precision_bits));
    *measure = r.measure.to_double();
    if (error_bound != nullptr) *error_bound = r.error_bound;
    return MAHLER_OK;
  });
}

mahler_status mahler_measure_json(const mahler_poly* poly, unsigned precision_bits, char** json) {
  if (poly == nullptr || json == nullptr) return check_out(nullptr);
  return guarded([&] {
    mahler::MahlerResult r = mahler::mahler_measure(poly->value, bits_or_default(precision_bits));
    nlohmann::json payload = mahler::to_json(r);
    payload["degree"] = poly->value.degree();
    return emit(payload, json);
  });
}

mahler_status mahler_bound_json(const mahler_poly* poly, unsigned precision_bits, char** json) {
  if (poly == nullptr || json == nullptr) return check_out(nullptr);
  return guarded([&] {
    mahler::IntPolynomial g = stripped(poly->value);
    nlohmann::json payload = mahler::to_json(mahler::theorem_bound(g, bits_or_default(precision_bits)));
    payload["checked_polynomial"] = mahler::to_dense_string(g);
    return emit(payload, json);
  });
}

mahler_status mahler_certify_json(const mahler_poly* poly, unsigned truncation, unsigned precision_bits, char** json) {
  if (poly == nullptr || json == nullptr) return check_out(nullptr);
  return guarded([&] {
    mahler::IntPolynomial g = mahler::normalize_signs(stripped(poly->value));
    std::optional<std::size_t> L;
    if (truncation > 0) L = truncation;
    mahler::Certificate cert = mahler::build_certificate(g, L, bits_or_default(precision_bits));
    nlohmann::json payload = mahler::to_json(cert);
    payload["certified_polynomial"] = mahler::to_dense_string(g);
    return emit(payload, json);
  });
}

mahler_status mahler_family_json(const char* a, const char* b, const char* c, unsigned k, unsigned n,
                                 unsigned precision_bits, char** json) {
  if (a == nullptr || b == nullptr || c == nullptr || json == nullptr) return check_out(nullptr);
  return guarded([&] {
    auto parse = [](const char* s) {
      mahler::IntPolynomial p = mahler::parse_polynomial(s);
      if (p.degree() > 0) throw mahler::Error(mahler::ErrorKind::kInvalidInput, std::string("not an integer: ") + s);
      return p.constant();
    };
    mahler::SharpFamilyParams params{parse(a), parse(b), parse(c), k, n};
    mahler::SharpnessReport report = mahler::verify_sharpness(params, bits_or_default(precision_bits));
    return emit(mahler::to_json(params, report), json);
  });
}

mahler_scan_config* mahler_scan_config_new(void) { return new (std::nothrow) mahler_scan_config{}; }

void mahler_scan_config_free(mahler_scan_config* config) { delete config; }

mahler_status mahler_scan_config_set_box(mahler_scan_config* config, unsigned degree_min, unsigned degree_max,
                                         long height) {
  if (config == nullptr) return check_out(nullptr);
  return guarded([&] {
    mahler::ScanConfig candidate = config->value;
    candidate.degree_min = degree_min;
    candidate.degree_max = degree_max;
    candidate.height = height;
    mahler::validate(candidate);
    config->value = std::move(candidate);
    return MAHLER_OK;
  });
}

void mahler_scan_config_set_precision(mahler_scan_config* config, unsigned precision_bits) {
  if (config != nullptr) config->value.precision_bits = bits_or_default(precision_bits);
}

void mahler_scan_config_set_workers(mahler_scan_config* config, unsigned workers) {
  if (config != nullptr) config->value.worker_count = workers == 0 ? 1 : workers;
}

void mahler_scan_config_set_require_applicable(mahler_scan_config* config, int require) {
  if (config != nullptr) config->value.require_applicable = require != 0;
}

void mahler_scan_config_set_filters(mahler_scan_config* config, int unit_endpoints_only, int odd_alpha_only,
                                    long min_alpha) {
  if (config == nullptr) return;
  config->value.filters.unit_endpoints_only = unit_endpoints_only != 0;
  config->value.filters.odd_alpha_only = odd_alpha_only != 0;
  config->value.filters.min_alpha = min_alpha < 0 ? std::nullopt : std::optional<long>(min_alpha);
}

mahler_status mahler_scan_config_inject(mahler_scan_config* config, const mahler_poly* poly) {
  if (config == nullptr || poly == nullptr) return check_out(nullptr);
  return guarded([&] {
    mahler::require_nonzero(poly->value, "inject");
    config->value.injected.push_back(poly->value);
    return MAHLER_OK;
  });
}

namespace {

mahler_status finish_scan(const mahler::ScanConfig& config, const mahler::ScanReport& report, char** json,
                          char** histogram_csv) {
  nlohmann::json payload = mahler::to_json(report);
  payload["config"] = mahler::to_json(config);
  if (histogram_csv != nullptr) *histogram_csv = copy_string(report.histogram.to_csv());
  emit(payload, json);
  return report.violations.empty() ? MAHLER_OK : MAHLER_VIOLATION_FOUND;
}

}  // namespace

mahler_status mahler_scan_json(const mahler_scan_config* config, char** json, char** histogram_csv) {
  if (config == nullptr || json == nullptr) return check_out(nullptr);
  return guarded([&] {
    mahler::ScanReport report = mahler::scan_bounds(config->value);
    return finish_scan(config->value, report, json, histogram_csv);
  });
}

mahler_status mahler_survey_json(const mahler_scan_config* config, char** json, char** histogram_csv) {
  if (config == nullptr || json == nullptr) return check_out(nullptr);
  return guarded([&] {
    mahler::SurveyReport survey = mahler::odd_alpha_survey(config->value);
    nlohmann::json payload = mahler::to_json(survey);
    payload["config"] = mahler::to_json(config->value);
    if (histogram_csv != nullptr) *histogram_csv = copy_string(survey.histogram.to_csv());
    emit(payload, json);
    return survey.scan.violations.empty() ? MAHLER_OK : MAHLER_VIOLATION_FOUND;
  });
}

mahler_status mahler_scan_corpus_json(const mahler_scan_config* config, const mahler_poly* const* polys, size_t count,
                                      char** json, char** histogram_csv) {
  if (config == nullptr || json == nullptr || (polys == nullptr && count > 0)) return check_out(nullptr);
  return guarded([&] {
    std::vector<mahler::IntPolynomial> list;
    list.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (polys[i] == nullptr) throw mahler::Error(mahler::ErrorKind::kInvalidInput, "null polynomial in corpus");
      list.push_back(polys[i]->value);
    }
    mahler::ScanReport report = mahler::scan_polynomials(list, config->value);
    return finish_scan(config->value, report, json, histogram_csv);
  });
}

}  // extern "C"
