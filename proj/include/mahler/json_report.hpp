#pragma once

// JSON payloads shared by the C API and the CLI. Real numbers are rounded to
// 15 significant digits; integers that do not fit in 64 bits are emitted as
// decimal strings; rationals as "p/q" strings.

#include "json.hpp"

#include "mahler/certificate.hpp"
#include "mahler/measure.hpp"
#include "mahler/nonreciprocal.hpp"
#include "mahler/poly.hpp"
#include "mahler/scan.hpp"
#include "mahler/sharp_family.hpp"

namespace mahler {

double round_significant(double value, int digits = 15);
nlohmann::json integer_json(const mpz_class& value);

nlohmann::json to_json(const MahlerResult& result);
nlohmann::json to_json(const NonreciprocalProfile& profile);
nlohmann::json to_json(const Certificate& cert);
nlohmann::json to_json(const SharpFamilyParams& params, const SharpnessReport& report);
nlohmann::json to_json(const InstanceRecord& record);
nlohmann::json to_json(const GapHistogram& histogram);
nlohmann::json to_json(const ScanConfig& config);
nlohmann::json to_json(const ScanReport& report);
nlohmann::json to_json(const SurveyReport& survey);

}  // namespace mahler
