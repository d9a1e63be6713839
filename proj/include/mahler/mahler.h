/*
 * C interface to the mahler library: Mahler measures of integer
 * polynomials, the k-nonreciprocal lower bound, per-polynomial proof
 * certificates, the extremal family and exhaustive box scans.
 *
 * Conventions:
 *  - Functions returning mahler_status set a thread-local error message on
 *    failure, readable with mahler_last_error().
 *  - JSON outputs are NUL-terminated, heap-allocated, and must be released
 *    with mahler_string_free(). On failure no string is allocated.
 *  - Handles are opaque; each *_new / *_parse is paired with a *_free.
 *  - precision_bits = 0 selects the default (128).
 */
#ifndef MAHLER_MAHLER_H_
#define MAHLER_MAHLER_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MAHLER_API __declspec(dllexport)
#else
#define MAHLER_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mahler_status {
  MAHLER_OK = 0,
  MAHLER_ERROR_INTERNAL = 1,
  MAHLER_ERROR_INVALID_INPUT = 2,
  MAHLER_ERROR_NUMERIC = 3,
  /* A scan finished and found an instance violating the bound. */
  MAHLER_VIOLATION_FOUND = 4
} mahler_status;

typedef struct mahler_poly mahler_poly;
typedef struct mahler_scan_config mahler_scan_config;

MAHLER_API const char* mahler_version(void);
MAHLER_API const char* mahler_last_error(void);
MAHLER_API const char* mahler_status_name(mahler_status status);
MAHLER_API void mahler_string_free(char* str);

/* Dense ("1,-1,-1") or sparse ("x^3-x-1") text. */
MAHLER_API mahler_status mahler_poly_parse(const char* text, mahler_poly** out);
/* coeffs[i] is the coefficient of x^i. */
MAHLER_API mahler_status mahler_poly_from_coeffs(const int64_t* coeffs, size_t count, mahler_poly** out);
MAHLER_API void mahler_poly_free(mahler_poly* poly);
/* -1 for the zero polynomial. */
MAHLER_API int mahler_poly_degree(const mahler_poly* poly);
/* Canonical dense form; free with mahler_string_free. */
MAHLER_API char* mahler_poly_to_dense(const mahler_poly* poly);

MAHLER_API mahler_status mahler_measure(const mahler_poly* poly, unsigned precision_bits, double* measure,
                                        double* error_bound);
MAHLER_API mahler_status mahler_measure_json(const mahler_poly* poly, unsigned precision_bits, char** json);

/* Zero roots are stripped before the profile is computed. */
MAHLER_API mahler_status mahler_bound_json(const mahler_poly* poly, unsigned precision_bits, char** json);

/* Zero roots are stripped and endpoint signs normalized first; the
 * certified polynomial is reported in the payload. truncation = 0 selects
 * max(2k, 16). */
MAHLER_API mahler_status mahler_certify_json(const mahler_poly* poly, unsigned truncation, unsigned precision_bits,
                                             char** json);

/* a, b, c are decimal integer strings. */
MAHLER_API mahler_status mahler_family_json(const char* a, const char* b, const char* c, unsigned k, unsigned n,
                                            unsigned precision_bits, char** json);

MAHLER_API mahler_scan_config* mahler_scan_config_new(void);
MAHLER_API void mahler_scan_config_free(mahler_scan_config* config);
MAHLER_API mahler_status mahler_scan_config_set_box(mahler_scan_config* config, unsigned degree_min,
                                                    unsigned degree_max, long height);
MAHLER_API void mahler_scan_config_set_precision(mahler_scan_config* config, unsigned precision_bits);
MAHLER_API void mahler_scan_config_set_workers(mahler_scan_config* config, unsigned workers);
MAHLER_API void mahler_scan_config_set_require_applicable(mahler_scan_config* config, int require);
/* min_alpha < 0 disables the alpha floor. */
MAHLER_API void mahler_scan_config_set_filters(mahler_scan_config* config, int unit_endpoints_only,
                                               int odd_alpha_only, long min_alpha);
MAHLER_API mahler_status mahler_scan_config_inject(mahler_scan_config* config, const mahler_poly* poly);

/* Returns MAHLER_VIOLATION_FOUND (with the report) if the violation list is
 * non-empty. histogram_csv may be NULL. */
MAHLER_API mahler_status mahler_scan_json(const mahler_scan_config* config, char** json, char** histogram_csv);
MAHLER_API mahler_status mahler_survey_json(const mahler_scan_config* config, char** json, char** histogram_csv);
MAHLER_API mahler_status mahler_scan_corpus_json(const mahler_scan_config* config, const mahler_poly* const* polys,
                                                 size_t count, char** json, char** histogram_csv);

#ifdef __cplusplus
}
#endif

#endif /* MAHLER_MAHLER_H_ */
