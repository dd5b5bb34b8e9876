#ifndef TRIJAC_HARNESS_HPP
#define TRIJAC_HARNESS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "trijac/report.hpp"

namespace trijac {

/// Suite selection and sampling knobs. Unset optionals take the suite's
/// own defaults.
struct SuiteConfig {
  std::string suite = "all";
  std::optional<unsigned> n_max;
  std::optional<std::size_t> window;
  std::optional<long> base_index;
  std::optional<unsigned> samples;
  std::uint64_t seed = 42;
  unsigned series_order = 12;
  std::string format = "json";
  Rational limit_ratio = Rational(3, 4);
  Rational limit_tol = Rational(1, 10000);
  unsigned limit_max_step = 8;
  /// Bound on |numerator| and denominator of sampled rationals.
  long bound = 9;
};

/// Suite identifiers accepted by run_suite, without "all".
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument on an unknown suite or out-of-range knob.
void validate(const SuiteConfig& cfg);

/// Applies flat "key = value" lines (blank lines and '#' comments allowed)
/// onto cfg. Keys match the long flag names with '-' or '_'.
void apply_config_text(SuiteConfig& cfg, const std::string& text);

/// Seeded source of bounded rationals; identical seeds give identical draws.
class Sampler {
 public:
  Sampler(std::uint64_t seed, const std::string& stream, long bound);

  /// p/q with |p| <= bound, 1 <= q <= bound.
  Rational rational();
  /// Nonzero p/q.
  Rational nonzero();
  /// Integer in [lo, hi].
  long integer(long lo, long hi);

 private:
  std::mt19937_64 rng_;
  long bound_;
};

/// Thrown when redraws exceed 1000 times the requested sample count.
class RedrawLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs the suite named in cfg ("all" runs every suite in order).
/// Rejected draws are counted in the report and listed in `log`.
VerificationReport run_suite(const SuiteConfig& cfg, std::vector<std::string>* log = nullptr);

/// The effective settings of a run, for echoing into reports.
std::map<std::string, std::string> config_echo(const SuiteConfig& cfg);

/// JSON report with the fixed schema. Only `timestamp` and `elapsed_ms`
/// depend on the clock.
std::string report_to_json(const VerificationReport& rep, const SuiteConfig& cfg, double elapsed_ms,
                           const std::string& timestamp);

/// Human-readable summary with one line per case.
std::string report_to_text(const VerificationReport& rep, double elapsed_ms);

/// Re-serializes a JSON report without its clock fields so two runs can be
/// compared byte for byte.
std::string strip_clock_fields(const std::string& json_text);

/// Current UTC time as an ISO 8601 string.
std::string utc_timestamp();

}  // namespace trijac

#endif  // TRIJAC_HARNESS_HPP
