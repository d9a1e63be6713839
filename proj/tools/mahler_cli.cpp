// Command-line front end. Talks to the library only through mahler.h.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mahler/mahler.h"

using nlohmann::json;

namespace {

enum ExitCode { kExitOk = 0, kExitInternal = 1, kExitInput = 2, kExitNumeric = 3, kExitViolation = 4 };

struct PolyDeleter {
  void operator()(mahler_poly* p) const { mahler_poly_free(p); }
};
using PolyHandle = std::unique_ptr<mahler_poly, PolyDeleter>;

struct ConfigDeleter {
  void operator()(mahler_scan_config* c) const { mahler_scan_config_free(c); }
};
using ConfigHandle = std::unique_ptr<mahler_scan_config, ConfigDeleter>;

struct Options {
  unsigned precision = 128;
  std::string format = "json";
};

int exit_code(mahler_status status) {
  switch (status) {
    case MAHLER_OK:
      return kExitOk;
    case MAHLER_ERROR_INVALID_INPUT:
      return kExitInput;
    case MAHLER_ERROR_NUMERIC:
      return kExitNumeric;
    case MAHLER_VIOLATION_FOUND:
      return kExitViolation;
    case MAHLER_ERROR_INTERNAL:
      break;
  }
  return kExitInternal;
}

std::string take_string(char* s) {
  if (s == nullptr) return {};
  std::string out(s);
  mahler_string_free(s);
  return out;
}

void flatten(const json& value, const std::string& prefix, std::ostream& out) {
  if (value.is_object()) {
    for (const auto& [key, child] : value.items()) flatten(child, prefix.empty() ? key : prefix + "." + key, out);
  } else if (value.is_array()) {
    if (value.empty()) out << prefix << ": []\n";
    for (std::size_t i = 0; i < value.size(); ++i) flatten(value[i], prefix + "[" + std::to_string(i) + "]", out);
  } else if (value.is_string()) {
    out << prefix << ": " << value.get<std::string>() << '\n';
  } else {
    out << prefix << ": " << value.dump() << '\n';
  }
}

class Reporter {
 public:
  Reporter(std::string command, const Options& options) : command_(std::move(command)), options_(options) {}

  void set_input(const mahler_poly* poly) { input_ = poly == nullptr ? json(nullptr) : json(take_string(mahler_poly_to_dense(poly))); }
  void set_input(json input) { input_ = std::move(input); }

  int ok(const json& payload, int code = kExitOk) {
    json envelope = {{"command", command_}, {"input", input_}, {"status", "ok"}, {"payload", payload}};
    print(envelope);
    return code;
  }

  int error(int code, const std::string& message) {
    json envelope = {{"command", command_},
                     {"input", input_},
                     {"status", "error"},
                     {"error", {{"code", code}, {"message", message}}}};
    print(envelope);
    return code;
  }

  int from_status(mahler_status status, char* raw) {
    std::string text = take_string(raw);
    if (status == MAHLER_OK || status == MAHLER_VIOLATION_FOUND) return ok(json::parse(text), exit_code(status));
    return error(exit_code(status), mahler_last_error());
  }

 private:
  void print(const json& envelope) const {
    if (options_.format == "plain") {
      flatten(envelope, "", std::cout);
    } else {
      std::cout << envelope.dump(2) << '\n';
    }
  }

  std::string command_;
  const Options& options_;
  json input_ = nullptr;
};

std::optional<PolyHandle> parse_or_report(const std::string& text, Reporter& reporter, int& code) {
  mahler_poly* raw = nullptr;
  if (mahler_poly_parse(text.c_str(), &raw) != MAHLER_OK) {
    code = reporter.error(kExitInput, std::string(mahler_last_error()));
    return std::nullopt;
  }
  PolyHandle poly(raw);
  reporter.set_input(poly.get());
  return poly;
}

int run_measure(const Options& options, const std::string& text) {
  Reporter reporter("measure", options);
  int code = kExitOk;
  auto poly = parse_or_report(text, reporter, code);
  if (!poly) return code;
  char* out = nullptr;
  mahler_status status = mahler_measure_json(poly->get(), options.precision, &out);
  return reporter.from_status(status, out);
}

int run_bound(const Options& options, const std::string& text) {
  Reporter reporter("bound", options);
  int code = kExitOk;
  auto poly = parse_or_report(text, reporter, code);
  if (!poly) return code;
  char* out = nullptr;
  mahler_status status = mahler_bound_json(poly->get(), options.precision, &out);
  return reporter.from_status(status, out);
}

int run_certify(const Options& options, const std::string& text, unsigned truncation) {
  Reporter reporter("certify", options);
  int code = kExitOk;
  auto poly = parse_or_report(text, reporter, code);
  if (!poly) return code;
  char* out = nullptr;
  mahler_status status = mahler_certify_json(poly->get(), truncation, options.precision, &out);
  return reporter.from_status(status, out);
}

struct FamilyArgs {
  std::string a, b, c;
  unsigned k = 1, n = 3;
};

int run_family(const Options& options, const FamilyArgs& args) {
  Reporter reporter("family", options);
  char* out = nullptr;
  mahler_status status =
      mahler_family_json(args.a.c_str(), args.b.c_str(), args.c.c_str(), args.k, args.n, options.precision, &out);
  if (status != MAHLER_OK) return reporter.from_status(status, out);
  json payload = json::parse(take_string(out));
  reporter.set_input(payload.at("coefficients"));
  return reporter.ok(payload);
}

struct ScanArgs {
  unsigned deg_min = 1, deg_max = 6;
  long height = 1;
  unsigned workers = 0;
  bool unit_endpoints = false;
  bool odd_alpha = false;
  long min_alpha = -1;
  bool include_inapplicable = false;
  std::vector<std::string> inject;
  std::string corpus;
  std::string csv;
};

bool read_corpus(const std::string& source, std::vector<std::string>& lines, std::string& error) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (source != "-") {
    file.open(source);
    if (!file) {
      error = "cannot open corpus file: " + source;
      return false;
    }
    in = &file;
  }
  std::string line;
  while (std::getline(*in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    lines.push_back(line.substr(first, last - first + 1));
  }
  return true;
}

int run_scan(const Options& options, const ScanArgs& args, bool survey) {
  Reporter reporter(survey ? "survey" : "scan", options);
  ConfigHandle config(mahler_scan_config_new());
  if (!config) return reporter.error(kExitInternal, "out of memory");
  if (mahler_scan_config_set_box(config.get(), args.deg_min, args.deg_max, args.height) != MAHLER_OK) {
    return reporter.error(kExitInput, mahler_last_error());
  }
  unsigned workers = args.workers;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  mahler_scan_config_set_precision(config.get(), options.precision);
  mahler_scan_config_set_workers(config.get(), workers);
  mahler_scan_config_set_require_applicable(config.get(), args.include_inapplicable ? 0 : 1);
  if (survey) {
    mahler_scan_config_set_filters(config.get(), 1, 1, args.min_alpha);
  } else {
    mahler_scan_config_set_filters(config.get(), args.unit_endpoints, args.odd_alpha, args.min_alpha);
  }

  std::vector<PolyHandle> polys;
  auto parse_all = [&](const std::vector<std::string>& texts, const char* what) -> std::optional<std::string> {
    for (const auto& text : texts) {
      mahler_poly* raw = nullptr;
      if (mahler_poly_parse(text.c_str(), &raw) != MAHLER_OK) {
        return std::string(what) + " '" + text + "': " + mahler_last_error();
      }
      polys.emplace_back(raw);
    }
    return std::nullopt;
  };

  char* out = nullptr;
  char* csv = nullptr;
  mahler_status status;
  if (!args.corpus.empty()) {
    if (survey) return reporter.error(kExitInput, "survey does not accept --corpus");
    std::vector<std::string> lines;
    std::string error;
    if (!read_corpus(args.corpus, lines, error)) return reporter.error(kExitInput, error);
    if (auto e = parse_all(lines, "corpus line")) return reporter.error(kExitInput, *e);
    std::vector<const mahler_poly*> view;
    for (const auto& p : polys) view.push_back(p.get());
    status = mahler_scan_corpus_json(config.get(), view.data(), view.size(), &out,
                                     args.csv.empty() ? nullptr : &csv);
  } else {
    if (auto e = parse_all(args.inject, "injected polynomial")) return reporter.error(kExitInput, *e);
    for (const auto& p : polys) {
      if (mahler_scan_config_inject(config.get(), p.get()) != MAHLER_OK) {
        return reporter.error(kExitInput, mahler_last_error());
      }
    }
    status = survey ? mahler_survey_json(config.get(), &out, args.csv.empty() ? nullptr : &csv)
                    : mahler_scan_json(config.get(), &out, args.csv.empty() ? nullptr : &csv);
  }
  std::string histogram = take_string(csv);
  if (!args.csv.empty() && (status == MAHLER_OK || status == MAHLER_VIOLATION_FOUND)) {
    std::ofstream file(args.csv);
    if (!file) {
      take_string(out);
      return reporter.error(kExitInput, "cannot write csv file: " + args.csv);
    }
    file << histogram;
  }
  return reporter.from_status(status, out);
}

// Polynomials such as "-x^2+1" or "-1,0,1" look like options to the parser;
// rewrite them into the --poly=... form for the commands that take one.
std::vector<std::string> protect_polynomials(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  bool takes_poly = false;
  for (auto& arg : args) {
    if (arg == "--") break;
    if (arg == "measure" || arg == "bound" || arg == "certify") {
      takes_poly = true;
    } else if (takes_poly && arg.size() > 1 && arg[0] == '-' && arg[1] != '-' && arg != "-h") {
      arg = "--poly=" + arg;
    }
  }
  return args;
}

void add_scan_options(CLI::App* cmd, ScanArgs& args, bool survey) {
  cmd->add_option("--deg-min", args.deg_min, "Smallest degree")->check(CLI::PositiveNumber);
  cmd->add_option("--deg-max", args.deg_max, "Largest degree")->check(CLI::PositiveNumber);
  cmd->add_option("--height", args.height, "Coefficient bound |a_i| <= height")->check(CLI::PositiveNumber);
  cmd->add_option("--workers", args.workers, "Worker threads (0 = all cores)");
  cmd->add_option("--min-alpha", args.min_alpha, "Only check instances with alpha >= this")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--csv", args.csv, "Write the gap histogram as CSV to this file");
  if (survey) return;
  cmd->add_flag("--unit-endpoints", args.unit_endpoints, "Only |a_0| = |a_n| = 1");
  cmd->add_flag("--odd-alpha", args.odd_alpha, "Only odd alpha");
  cmd->add_flag("--include-inapplicable", args.include_inapplicable,
                "Also measure instances the bound does not apply to");
  cmd->add_option("--inject", args.inject, "Extra polynomial to check after the box");
  cmd->add_option("--corpus", args.corpus, "Check the polynomials in this file ('-' for stdin) instead of a box");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mahler measures and the k-nonreciprocal lower bound"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(mahler_version()));

  Options options;
  app.add_option("--precision", options.precision, "Working precision in bits")
      ->envname("MAHLER_PRECISION")
      ->check(CLI::Range(16u, 1u << 16));
  app.add_option("--format", options.format, "Output format")->check(CLI::IsMember({"json", "plain"}));

  std::string poly_text;
  unsigned truncation = 0;
  FamilyArgs family;
  ScanArgs scan_args;
  ScanArgs survey_args;
  survey_args.deg_max = 8;

  auto* measure = app.add_subcommand("measure", "Mahler measure with error bound and root classification");
  measure->add_option("poly,--poly", poly_text, "Polynomial, dense or sparse")->required();
  auto* bound = app.add_subcommand("bound", "Nonreciprocity profile and lower bound");
  bound->add_option("poly,--poly", poly_text, "Polynomial, dense or sparse")->required();
  auto* certify = app.add_subcommand("certify", "Series and Blaschke product certificate");
  certify->add_option("poly,--poly", poly_text, "Polynomial, dense or sparse")->required();
  certify->add_option("--trunc", truncation, "Truncation order L (default max(2k, 16))")->check(CLI::PositiveNumber);
  auto* fam = app.add_subcommand("family", "Member of the extremal family (a x^2k + b x^k + c)(x^(n-2k) - 1)");
  fam->add_option("--a", family.a, "a > 0")->required();
  fam->add_option("--b", family.b, "b")->required();
  fam->add_option("--c", family.c, "c < 0")->required();
  fam->add_option("--k", family.k, "k >= 1")->required();
  fam->add_option("--n", family.n, "degree n > 2k, n != 3k")->required();
  auto* scan = app.add_subcommand("scan", "Check the bound on every polynomial of a coefficient box");
  add_scan_options(scan, scan_args, false);
  auto* survey = app.add_subcommand("survey", "Smallest gap over unit-endpoint, odd-alpha instances");
  add_scan_options(survey, survey_args, true);

  try {
    std::vector<std::string> args = protect_polynomials(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::string command = app.get_subcommands().empty() ? "" : app.get_subcommands().front()->get_name();
    Reporter reporter(command, options);
    return reporter.error(kExitInput, e.what());
  }

  try {
    if (*measure) return run_measure(options, poly_text);
    if (*bound) return run_bound(options, poly_text);
    if (*certify) return run_certify(options, poly_text, truncation);
    if (*fam) return run_family(options, family);
    if (*scan) return run_scan(options, scan_args, false);
    if (*survey) return run_scan(options, survey_args, true);
  } catch (const std::exception& e) {
    std::cerr << "mahler: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInput;
}
