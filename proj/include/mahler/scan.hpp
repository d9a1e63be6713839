#pragma once

// Exhaustive coefficient-box scans against the nonreciprocal lower bound.
//
// The box for degree d and height h holds every f with a_d in [1, h] (the
// f -> -f symmetry is quotiented out), a_0 in [-h, h] \ {0} and the remaining
// coefficients in [-h, h]: h (2h+1)^(d-1) 2h polynomials. Work is split into
// shards on (a_d, a_{d-1}); shard results are merged in shard order, so the
// report does not depend on the worker count.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mahler/bigfloat.hpp"
#include "mahler/poly.hpp"

namespace mahler {

struct ScanFilters {
  bool odd_alpha_only = false;
  bool unit_endpoints_only = false;  // |a_0| = |a_n| = 1
  std::optional<long> min_alpha;
};

struct ScanConfig {
  std::size_t degree_min = 1;
  std::size_t degree_max = 6;
  long height = 1;
  bool require_applicable = true;
  Precision precision_bits = kDefaultPrecision;
  unsigned worker_count = 1;
  ScanFilters filters;
  // Extra polynomials checked after the box, e.g. known extremal instances.
  std::vector<IntPolynomial> injected;
};

// Throws Error(kInvalidInput) for degree_min < 1, degree_max < degree_min,
// height < 1 or worker_count < 1.
void validate(const ScanConfig& config);

mpz_class enumeration_count(const ScanConfig& config);

struct Shard {
  std::size_t degree = 1;
  long top = 1;     // a_d
  long second = 0;  // a_{d-1}; for degree 1 this is a_0 and never zero
};

std::vector<Shard> make_shards(const ScanConfig& config);
std::uint64_t shard_size(const Shard& shard, long height);
void enumerate_shard(const Shard& shard, long height, const std::function<void(const IntPolynomial&)>& visit);

// Streams the whole box in a fixed order.
void enumerate(const ScanConfig& config, const std::function<void(const IntPolynomial&)>& visit);

struct InstanceRecord {
  IntPolynomial polynomial;
  std::uint64_t index = 0;  // position in the scan order
  std::size_t k = 0;
  mpz_class alpha;
  double bound = 0.0;
  double measure = 0.0;
  double error_bound = 0.0;
  double gap = 0.0;  // measure - bound
};

struct GapHistogram {
  // Bin i counts gaps in [edges[i-1], edges[i]); bin 0 is everything below
  // edges[0] and the last bin is everything at or above edges.back().
  std::vector<double> edges;
  std::vector<std::uint64_t> counts;

  static GapHistogram standard();
  void add(double gap);
  void merge(const GapHistogram& other);
  std::string to_csv() const;
};

struct ScanReport {
  std::uint64_t total_enumerated = 0;
  std::uint64_t applicable_count = 0;
  std::uint64_t checked_count = 0;  // applicable and passing the filters
  std::uint64_t nontrivial_count = 0;
  std::uint64_t trivial_count = 0;
  // Nontrivial instances whose bound did not exceed max(|a_0|,|a_n|) in
  // exact arithmetic; expected to stay zero.
  std::uint64_t nontrivial_exact_failures = 0;
  std::uint64_t retried_count = 0;
  std::vector<InstanceRecord> violations;
  // Numerical near-misses cleared by re-verification.
  std::vector<InstanceRecord> unconfirmed;
  std::vector<std::string> incomplete;
  std::optional<InstanceRecord> min_gap_witness;
  std::optional<InstanceRecord> min_measure_checked;
  std::optional<InstanceRecord> min_measure_nonreciprocal;
  // Smallest bound among checked instances (for the alpha >= 2 consequence).
  std::optional<InstanceRecord> min_bound_checked;
  GapHistogram histogram = GapHistogram::standard();
  double runtime_seconds = 0.0;
  unsigned workers = 1;

  // Everything but runtime_seconds and workers.
  bool same_results(const ScanReport& other) const;
};

// Violation threshold: measure + error_bound < bound - 2^-40.
inline constexpr double kViolationTolerance = 0x1p-40;

ScanReport scan_bounds(const ScanConfig& config);

// Corpus mode: checks the given polynomials (zero roots stripped first) with
// the filters and precision of `config`; the box fields are ignored.
ScanReport scan_polynomials(const std::vector<IntPolynomial>& polys, const ScanConfig& config);

struct SurveyReport {
  std::uint64_t instances = 0;
  bool zero_instances = true;
  std::optional<InstanceRecord> witness;  // smallest measure - bound
  GapHistogram histogram = GapHistogram::standard();
  ScanReport scan;
};

// Requires filters.unit_endpoints_only and filters.odd_alpha_only.
SurveyReport odd_alpha_survey(const ScanConfig& config);

}  // namespace mahler
