#include "mahler/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "mahler/error.hpp"
#include "mahler/measure.hpp"
#include "mahler/nonreciprocal.hpp"

namespace mahler {

void validate(const ScanConfig& config) {
  if (config.degree_min < 1) throw Error(ErrorKind::kInvalidInput, "scan: degree_min must be at least 1");
  if (config.degree_max < config.degree_min) {
    throw Error(ErrorKind::kInvalidInput, "scan: degree_max must be at least degree_min");
  }
  if (config.height < 1) throw Error(ErrorKind::kInvalidInput, "scan: height must be at least 1");
  if (config.worker_count < 1) throw Error(ErrorKind::kInvalidInput, "scan: worker_count must be at least 1");
  if (config.precision_bits < 16) throw Error(ErrorKind::kInvalidInput, "scan: precision must be at least 16 bits");
}

mpz_class enumeration_count(const ScanConfig& config) {
  validate(config);
  const mpz_class h = config.height;
  mpz_class total = 0;
  for (std::size_t d = config.degree_min; d <= config.degree_max; ++d) {
    mpz_class middle;
    mpz_pow_ui(middle.get_mpz_t(), mpz_class(2 * h + 1).get_mpz_t(), d - 1);
    total += h * middle * 2 * h;
  }
  return total;
}

std::vector<Shard> make_shards(const ScanConfig& config) {
  validate(config);
  std::vector<Shard> out;
  const long h = config.height;
  for (std::size_t d = config.degree_min; d <= config.degree_max; ++d) {
    for (long top = 1; top <= h; ++top) {
      for (long second = -h; second <= h; ++second) {
        if (d == 1 && second == 0) continue;
        out.push_back({d, top, second});
      }
    }
  }
  return out;
}

std::uint64_t shard_size(const Shard& shard, long height) {
  if (shard.degree == 1) return 1;
  std::uint64_t size = 2 * static_cast<std::uint64_t>(height);
  for (std::size_t i = 0; i + 2 < shard.degree; ++i) size *= 2 * static_cast<std::uint64_t>(height) + 1;
  return size;
}

void enumerate_shard(const Shard& shard, long height, const std::function<void(const IntPolynomial&)>& visit) {
  const std::size_t d = shard.degree;
  if (d == 1) {
    visit(IntPolynomial{shard.second, shard.top});
    return;
  }
  // Odometer over a_0 (nonzero) and a_1 .. a_{d-2}; a_0 turns fastest.
  std::vector<long> c(d + 1, -height);
  c[d] = shard.top;
  c[d - 1] = shard.second;
  std::vector<mpz_class> coeffs(d + 1);
  while (true) {
    for (std::size_t i = 0; i <= d; ++i) coeffs[i] = c[i];
    visit(IntPolynomial(coeffs));
    std::size_t pos = 0;
    while (pos + 1 < d) {
      ++c[pos];
      if (pos == 0 && c[0] == 0) c[0] = 1;
      if (c[pos] <= height) break;
      c[pos] = -height;
      ++pos;
    }
    if (pos + 1 == d) return;
  }
}

void enumerate(const ScanConfig& config, const std::function<void(const IntPolynomial&)>& visit) {
  for (const Shard& shard : make_shards(config)) enumerate_shard(shard, config.height, visit);
}

// ---------------------------------------------------------------------------

GapHistogram GapHistogram::standard() {
  GapHistogram h;
  h.edges = {1e-9, 1e-6, 1e-3, 1e-2, 1e-1, 1.0, 10.0};
  h.counts.assign(h.edges.size() + 1, 0);
  return h;
}

void GapHistogram::add(double gap) {
  std::size_t bin = static_cast<std::size_t>(std::upper_bound(edges.begin(), edges.end(), gap) - edges.begin());
  ++counts[bin];
}

void GapHistogram::merge(const GapHistogram& other) {
  for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
}

std::string GapHistogram::to_csv() const {
  std::ostringstream out;
  out << "bin_lo,bin_hi,count\n";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i == 0) {
      out << "-inf";
    } else {
      out << edges[i - 1];
    }
    out << ',';
    if (i == edges.size()) {
      out << "inf";
    } else {
      out << edges[i];
    }
    out << ',' << counts[i] << '\n';
  }
  return out.str();
}

namespace {

bool same_record(const std::optional<InstanceRecord>& a, const std::optional<InstanceRecord>& b) {
  if (a.has_value() != b.has_value()) return false;
  if (!a) return true;
  return a->polynomial == b->polynomial && a->index == b->index && a->measure == b->measure && a->gap == b->gap;
}

bool same_records(const std::vector<InstanceRecord>& a, const std::vector<InstanceRecord>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i].polynomial == b[i].polynomial) || a[i].index != b[i].index) return false;
  }
  return true;
}

// Keeps the record with the smaller key; ties go to the earlier index.
template <typename Key>
void keep_min(std::optional<InstanceRecord>& slot, const InstanceRecord& candidate, Key key) {
  if (!slot || key(candidate) < key(*slot) || (key(candidate) == key(*slot) && candidate.index < slot->index)) {
    slot = candidate;
  }
}

void merge_min(std::optional<InstanceRecord>& slot, const std::optional<InstanceRecord>& other, double InstanceRecord::*field) {
  if (other) keep_min(slot, *other, [field](const InstanceRecord& r) { return r.*field; });
}

void merge_into(ScanReport& total, ScanReport&& part) {
  total.total_enumerated += part.total_enumerated;
  total.applicable_count += part.applicable_count;
  total.checked_count += part.checked_count;
  total.nontrivial_count += part.nontrivial_count;
  total.trivial_count += part.trivial_count;
  total.nontrivial_exact_failures += part.nontrivial_exact_failures;
  total.retried_count += part.retried_count;
  for (auto& v : part.violations) total.violations.push_back(std::move(v));
  for (auto& v : part.unconfirmed) total.unconfirmed.push_back(std::move(v));
  for (auto& v : part.incomplete) total.incomplete.push_back(std::move(v));
  merge_min(total.min_gap_witness, part.min_gap_witness, &InstanceRecord::gap);
  merge_min(total.min_measure_checked, part.min_measure_checked, &InstanceRecord::measure);
  merge_min(total.min_measure_nonreciprocal, part.min_measure_nonreciprocal, &InstanceRecord::measure);
  merge_min(total.min_bound_checked, part.min_bound_checked, &InstanceRecord::bound);
  total.histogram.merge(part.histogram);
}

class InstanceChecker {
 public:
  explicit InstanceChecker(const ScanConfig& config) : config_(config) {}

  void check(const IntPolynomial& f, std::uint64_t index, ScanReport& report) const {
    ++report.total_enumerated;
    const Precision bits = config_.precision_bits;
    const NonreciprocalProfile profile = theorem_bound(f, bits);
    if (!profile.theorem_applicable && config_.require_applicable) return;
    if (profile.theorem_applicable) ++report.applicable_count;
    if (!passes_filters(profile)) return;

    std::optional<MahlerResult> measured = measure_with_retry(f, report);
    if (!measured) return;

    InstanceRecord record;
    record.polynomial = f;
    record.index = index;
    record.k = profile.k.value_or(0);
    record.alpha = profile.alpha.value_or(0);
    record.measure = measured->measure.to_double();
    record.error_bound = measured->error_bound;
    record.bound = profile.bound_value.to_double();
    record.gap = (measured->measure - profile.bound_value).to_double();

    const Real one(1L, bits);
    if (!is_reciprocal(f) && measured->measure > one + circle_tolerance(bits)) {
      keep_min(report.min_measure_nonreciprocal, record, [](const InstanceRecord& r) { return r.measure; });
    }
    if (!profile.theorem_applicable) return;

    ++report.checked_count;

    switch (classify_triviality(profile)) {
      case Triviality::kNontrivial: {
        ++report.nontrivial_count;
        mpz_class endpoint = std::max(mpz_class(abs(profile.a0)), mpz_class(abs(profile.an)));
        if (!bound_exceeds(profile.bound_exact, endpoint)) ++report.nontrivial_exact_failures;
        break;
      }
      case Triviality::kTrivial:
        ++report.trivial_count;
        break;
      case Triviality::kNotApplicable:
        break;
    }

    report.histogram.add(record.gap);
    keep_min(report.min_gap_witness, record, [](const InstanceRecord& r) { return r.gap; });
    keep_min(report.min_measure_checked, record, [](const InstanceRecord& r) { return r.measure; });
    keep_min(report.min_bound_checked, record, [](const InstanceRecord& r) { return r.bound; });

    const Real threshold = profile.bound_value - Real(kViolationTolerance, bits);
    if (measured->measure + Real(measured->error_bound, bits) < threshold) reverify(f, profile, record, report);
  }

 private:
  bool passes_filters(const NonreciprocalProfile& profile) const {
    const ScanFilters& filters = config_.filters;
    if (filters.unit_endpoints_only && (abs(profile.a0) != 1 || abs(profile.an) != 1)) return false;
    if (filters.odd_alpha_only && (!profile.alpha || mpz_odd_p(profile.alpha->get_mpz_t()) == 0)) return false;
    if (filters.min_alpha && (!profile.alpha || *profile.alpha < *filters.min_alpha)) return false;
    return true;
  }

  std::optional<MahlerResult> measure_with_retry(const IntPolynomial& f, ScanReport& report) const {
    try {
      return mahler_measure(f, config_.precision_bits);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kNumericFailure) throw;
    }
    ++report.retried_count;
    try {
      return mahler_measure(f, 2 * std::max(config_.precision_bits, kMaxPrecision));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kNumericFailure) throw;
      report.incomplete.push_back(to_dense_string(f) + ": " + e.what());
    }
    return std::nullopt;
  }

  // A candidate violation must survive 4x precision and the Graeffe
  // enclosure before it is recorded.
  void reverify(const IntPolynomial& f, const NonreciprocalProfile& profile, InstanceRecord record,
                ScanReport& report) const {
    const Precision bits = 4 * config_.precision_bits;
    const MahlerResult precise = mahler_measure(f, bits);
    const Real bound = evaluate_bound(profile.bound_exact, bits);
    const Real threshold = bound - Real(kViolationTolerance, bits);
    record.measure = precise.measure.to_double();
    record.error_bound = precise.error_bound;
    record.gap = (precise.measure - bound).to_double();
    const bool numeric_violation = precise.measure + Real(precise.error_bound, bits) < threshold;
    const Interval enclosure = graeffe_measure(f, 10);
    if (numeric_violation && Real(enclosure.hi, bits) < threshold) {
      report.violations.push_back(std::move(record));
    } else {
      report.unconfirmed.push_back(std::move(record));
    }
  }

  const ScanConfig& config_;
};

template <typename Task>
void run_parallel(std::size_t task_count, unsigned workers, Task task) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= task_count) return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = task_count;
      }
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(task_count)));
  std::vector<std::thread> threads;
  for (unsigned t = 1; t < count; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

bool ScanReport::same_results(const ScanReport& o) const {
  return total_enumerated == o.total_enumerated && applicable_count == o.applicable_count &&
         checked_count == o.checked_count && nontrivial_count == o.nontrivial_count &&
         trivial_count == o.trivial_count && nontrivial_exact_failures == o.nontrivial_exact_failures &&
         retried_count == o.retried_count && same_records(violations, o.violations) &&
         same_records(unconfirmed, o.unconfirmed) && incomplete == o.incomplete &&
         same_record(min_gap_witness, o.min_gap_witness) && same_record(min_measure_checked, o.min_measure_checked) &&
         same_record(min_measure_nonreciprocal, o.min_measure_nonreciprocal) &&
         same_record(min_bound_checked, o.min_bound_checked) && histogram.counts == o.histogram.counts;
}

ScanReport scan_bounds(const ScanConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  validate(config);
  const std::vector<Shard> shards = make_shards(config);
  std::vector<std::uint64_t> offsets(shards.size() + 1, 0);
  for (std::size_t i = 0; i < shards.size(); ++i) offsets[i + 1] = offsets[i] + shard_size(shards[i], config.height);

  const InstanceChecker checker(config);
  std::vector<ScanReport> parts(shards.size() + 1);
  run_parallel(shards.size(), config.worker_count, [&](std::size_t i) {
    std::uint64_t index = offsets[i];
    enumerate_shard(shards[i], config.height,
                    [&](const IntPolynomial& f) { checker.check(f, index++, parts[i]); });
  });
  std::uint64_t index = offsets.back();
  for (const IntPolynomial& f : config.injected) {
    auto [g, zeros] = strip_zero_roots(f);
    if (g.degree() >= 1) checker.check(g, index, parts.back());
    ++index;
  }

  ScanReport total;
  for (auto& part : parts) merge_into(total, std::move(part));
  total.workers = config.worker_count;
  total.runtime_seconds = seconds_since(start);
  return total;
}

ScanReport scan_polynomials(const std::vector<IntPolynomial>& polys, const ScanConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  if (config.worker_count < 1) throw Error(ErrorKind::kInvalidInput, "scan: worker_count must be at least 1");
  const InstanceChecker checker(config);
  std::vector<ScanReport> parts(polys.size());
  run_parallel(polys.size(), config.worker_count, [&](std::size_t i) {
    require_nonzero(polys[i], "scan");
    auto [g, zeros] = strip_zero_roots(polys[i]);
    if (g.degree() >= 1) {
      checker.check(g, i, parts[i]);
    } else {
      ++parts[i].total_enumerated;
    }
  });
  ScanReport total;
  for (auto& part : parts) merge_into(total, std::move(part));
  total.workers = config.worker_count;
  total.runtime_seconds = seconds_since(start);
  return total;
}

SurveyReport odd_alpha_survey(const ScanConfig& config) {
  if (!config.filters.unit_endpoints_only || !config.filters.odd_alpha_only) {
    throw Error(ErrorKind::kInvalidInput, "survey: requires the unit_endpoints_only and odd_alpha_only filters");
  }
  SurveyReport survey;
  survey.scan = scan_bounds(config);
  survey.instances = survey.scan.checked_count;
  survey.zero_instances = survey.instances == 0;
  survey.witness = survey.scan.min_gap_witness;
  survey.histogram = survey.scan.histogram;
  return survey;
}

}  // namespace mahler
