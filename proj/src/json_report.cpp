#include "mahler/json_report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace mahler {

using nlohmann::json;

double round_significant(double value, int digits) {
  if (!std::isfinite(value) || value == 0.0) return value;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

json integer_json(const mpz_class& value) {
  if (value.fits_slong_p()) return value.get_si();
  return value.get_str();
}

namespace {

double r15(const Real& x) { return round_significant(x.to_double()); }
double r15(double x) { return round_significant(x); }

json rational_json(const mpq_class& q) { return q.get_str(); }

json complex_json(const Complex& z) { return {{"re", r15(z.real())}, {"im", r15(z.imag())}}; }

json optional_record(const std::optional<InstanceRecord>& r) { return r ? to_json(*r) : json(nullptr); }

}  // namespace

json to_json(const MahlerResult& result) {
  json roots = json::array();
  std::size_t inside = 0, on = 0, outside = 0;
  for (const auto& r : result.roots) {
    roots.push_back({{"re", r15(r.value.real())},
                     {"im", r15(r.value.imag())},
                     {"modulus", r15(abs(r.value))},
                     {"radius", r15(r.radius)},
                     {"class", to_string(r.modulus_class)},
                     {"multiplicity", r.multiplicity}});
    switch (r.modulus_class) {
      case ModulusClass::kInside:
        inside += r.multiplicity;
        break;
      case ModulusClass::kOnCircle:
        on += r.multiplicity;
        break;
      case ModulusClass::kOutside:
        outside += r.multiplicity;
        break;
    }
  }
  return {{"measure", r15(result.measure)},
          {"error_bound", r15(result.error_bound)},
          {"leading_abs", integer_json(result.leading_abs)},
          {"zero_root_multiplicity", result.zero_root_multiplicity},
          {"precision_bits", result.precision_used},
          {"root_counts", {{"inside", inside}, {"on_circle", on}, {"outside", outside}}},
          {"roots", roots}};
}

json to_json(const NonreciprocalProfile& profile) {
  return {{"k", profile.k ? json(*profile.k) : json(nullptr)},
          {"alpha", profile.alpha ? integer_json(*profile.alpha) : json(nullptr)},
          {"a0", integer_json(profile.a0)},
          {"an", integer_json(profile.an)},
          {"degree", profile.degree},
          {"applicable", profile.theorem_applicable},
          {"bound_exact",
           {{"alpha", integer_json(profile.bound_exact.alpha)},
            {"D", integer_json(profile.bound_exact.discriminant)},
            {"denom", integer_json(profile.bound_exact.denominator)}}},
          {"bound_value", r15(profile.bound_value)},
          {"triviality", to_string(classify_triviality(profile))}};
}

json to_json(const Certificate& cert) {
  json q = json::array(), e = json::array(), b = json::array(), c = json::array();
  for (const auto& x : cert.q) q.push_back(rational_json(x));
  for (const auto& x : cert.e) e.push_back(rational_json(x));
  for (const auto& x : cert.b) b.push_back(complex_json(x));
  for (const auto& x : cert.c) c.push_back(complex_json(x));
  json checks = json::array();
  for (const auto& check : cert.checks) {
    json entry = {{"name", check.name},
                  {"passed", check.passed},
                  {"residual", r15(check.residual)},
                  {"tolerance", r15(check.tolerance)}};
    if (check.slack) entry["slack"] = r15(*check.slack);
    checks.push_back(entry);
  }
  return {{"k", cert.k},
          {"truncation", cert.truncation},
          {"precision_bits", cert.precision},
          {"epsilon", cert.epsilon},
          {"normalization", cert.normalization},
          {"measure", r15(cert.measure)},
          {"measure_error", r15(cert.measure_error)},
          {"tolerance", r15(cert.tolerance)},
          {"q", q},
          {"e", e},
          {"b", b},
          {"c", c},
          {"checks", checks},
          {"all_passed", cert.all_passed()}};
}

json to_json(const SharpFamilyParams& params, const SharpnessReport& report) {
  return {{"params",
           {{"a", integer_json(params.a)},
            {"b", integer_json(params.b)},
            {"c", integer_json(params.c)},
            {"k", params.k},
            {"n", params.n}}},
          {"case", to_string(report.expansion)},
          {"coefficients", to_dense_string(report.polynomial)},
          {"polynomial", to_sparse_string(report.polynomial)},
          {"applicable", report.applicable},
          {"alpha", integer_json(report.alpha)},
          {"alpha_matches", report.alpha_matches},
          {"exact_identity", report.exact_identity},
          {"detected_k_matches", report.detected_k_matches},
          {"bound", r15(report.bound)},
          {"closed_form", r15(report.closed_form)},
          {"numeric_measure", r15(report.numeric_measure)},
          {"numeric_error", r15(report.numeric_error)},
          {"max_discrepancy", r15(report.max_discrepancy)},
          {"tolerance", r15(report.tolerance)},
          {"sharp", report.agrees()}};
}

json to_json(const InstanceRecord& record) {
  return {{"polynomial", to_dense_string(record.polynomial)},
          {"index", record.index},
          {"k", record.k},
          {"alpha", integer_json(record.alpha)},
          {"bound", r15(record.bound)},
          {"measure", r15(record.measure)},
          {"error_bound", r15(record.error_bound)},
          {"gap", r15(record.gap)}};
}

json to_json(const GapHistogram& histogram) {
  return {{"edges", histogram.edges}, {"counts", histogram.counts}};
}

json to_json(const ScanConfig& config) {
  return {{"degree_min", config.degree_min},
          {"degree_max", config.degree_max},
          {"height", config.height},
          {"require_applicable", config.require_applicable},
          {"precision_bits", config.precision_bits},
          {"worker_count", config.worker_count},
          {"filters",
           {{"odd_alpha_only", config.filters.odd_alpha_only},
            {"unit_endpoints_only", config.filters.unit_endpoints_only},
            {"min_alpha", config.filters.min_alpha ? json(*config.filters.min_alpha) : json(nullptr)}}},
          {"injected", config.injected.size()}};
}

json to_json(const ScanReport& report) {
  json violations = json::array(), unconfirmed = json::array();
  for (const auto& v : report.violations) violations.push_back(to_json(v));
  for (const auto& v : report.unconfirmed) unconfirmed.push_back(to_json(v));
  return {{"total_enumerated", report.total_enumerated},
          {"applicable_count", report.applicable_count},
          {"checked_count", report.checked_count},
          {"nontrivial_count", report.nontrivial_count},
          {"trivial_count", report.trivial_count},
          {"nontrivial_exact_failures", report.nontrivial_exact_failures},
          {"retried_count", report.retried_count},
          {"violation_list", violations},
          {"unconfirmed_candidates", unconfirmed},
          {"incomplete", report.incomplete},
          {"min_gap_witness", optional_record(report.min_gap_witness)},
          {"min_measure_checked", optional_record(report.min_measure_checked)},
          {"min_measure_nonreciprocal", optional_record(report.min_measure_nonreciprocal)},
          {"min_bound_checked", optional_record(report.min_bound_checked)},
          {"gap_histogram", to_json(report.histogram)},
          {"runtime_stats", {{"seconds", r15(report.runtime_seconds)}, {"workers", report.workers}}}};
}

json to_json(const SurveyReport& survey) {
  return {{"instances", survey.instances},
          {"zero_instances", survey.zero_instances},
          {"min_gap_odd_alpha", survey.witness ? json(r15(survey.witness->gap)) : json(nullptr)},
          {"witness", optional_record(survey.witness)},
          {"histogram", to_json(survey.histogram)},
          {"violation_count", survey.scan.violations.size()},
          {"total_enumerated", survey.scan.total_enumerated}};
}

}  // namespace mahler
