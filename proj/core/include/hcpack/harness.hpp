#ifndef HCPACK_HARNESS_HPP
#define HCPACK_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "hcpack/process.hpp"
#include "hcpack/validators.hpp"

namespace hcpack {

enum class ValidationLevel { kOff, kFast, kFull };
std::string_view to_string(ValidationLevel level);
ValidationLevel validation_level_from_string(std::string_view s);

struct TrialConfig {
  Vertex n = 1024;
  int sigma = 2;
  double epsilon = 0.1;
  std::uint64_t seed = 1;
  std::size_t trials = 1;
  std::size_t parallelism = 1;
  bool strict_boosters = false;
  ValidationLevel validation = ValidationLevel::kFast;
  std::optional<StreamMode> stream_mode;  // default: full-shuffle up to 10^4, rejection above
  std::optional<int> d_full;
  std::optional<double> omega;
  double delta_exponent = 0.9;
  std::optional<double> small_divisor;   // default 100 q
  double expansion_alpha = 0.01;
  std::size_t expansion_samples = 1000;
  std::size_t secondary_closures = 32;
  bool record_timings = false;
  std::string dump_edges;
  std::string dump_colored;
  std::string dump_cycles;
  std::string out;
  std::string summary;

  int q() const { return 2 * sigma; }
  double effective_omega() const;
  StreamMode effective_stream_mode() const;
  /// Throws InvalidParameter when a field is out of range.
  void validate() const;
};

nlohmann::json to_json(const TrialConfig& c);
TrialConfig trial_config_from_json(const nlohmann::json& j);

struct ColorOutcome {
  bool success = false;
  std::uint64_t rounds = 0;
  std::uint64_t boosters_used = 0;
  std::uint64_t boosters_examined = 0;
  std::uint64_t star_closures = 0;
  std::uint64_t posa_checks = 0;  // completed no-extension searches
  std::uint64_t posa_violations = 0;
  std::size_t final_path_length = 0;
  std::size_t star_edges = 0;
  std::size_t booster_pool = 0;
  std::string cycle_checksum;  // empty unless success
  std::vector<Vertex> cycle;   // kept in memory only, not serialised
};

struct TrialReport {
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  Vertex n = 0;
  int sigma = 0;
  double epsilon = 0.0;
  std::uint64_t tau = 0;
  std::uint64_t t_eps = 0;
  bool eps_too_large = false;
  std::size_t full_size = 0;
  bool full_success = false;
  std::vector<ColorOutcome> colors;
  ValidatorReport validators;
  std::optional<std::map<std::string, double>> timings_ms;
};

nlohmann::json to_json(const TrialReport& r);

/// Per-trial seed: hash of master seed and trial index.
std::uint64_t trial_seed(std::uint64_t master, std::size_t trial);

/// stream -> online coloring until min degree 2 sigma -> merge -> engine per
/// color -> validators -> report.
TrialReport run_trial(const TrialConfig& config, std::size_t trial_index = 0);

struct ExperimentSummary {
  Vertex n = 0;
  int sigma = 0;
  double epsilon = 0.0;
  std::size_t trials = 0;
  double full_success_rate = 0.0;
  double mean_tau = 0.0;
  double norm_tau = 0.0;  // mean tau / (n (ln n + (2 sigma - 1) ln ln n) / 2)
  std::uint64_t min_tau = 0;
  std::uint64_t max_tau = 0;
  std::vector<double> color_success_rates;
  struct Counts {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;
    std::optional<double> pass_rate() const;
    friend bool operator==(const Counts&, const Counts&) = default;
  };
  std::map<std::string, Counts> validators;

  friend bool operator==(const ExperimentSummary&, const ExperimentSummary&) = default;
};

/// Aggregates trial records as emitted in the JSON-lines log.
ExperimentSummary summarize(const std::vector<nlohmann::json>& records);

void write_summary_csv(std::ostream& out, const ExperimentSummary& s);

struct ExperimentResult {
  ExperimentSummary summary;
  std::vector<std::string> log_lines;  // trial order
};

/// Runs config.trials independent trials on config.parallelism threads.
/// `sink`, when set, receives each log line in trial order.
ExperimentResult run_experiment(const TrialConfig& config,
                                const std::function<void(const std::string&)>& sink = {});

/// Reads a JSON-lines trial log.
std::vector<nlohmann::json> read_trial_log(std::istream& in);

}  // namespace hcpack

#endif  // HCPACK_HARNESS_HPP
