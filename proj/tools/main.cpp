#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "hcpack/harness.hpp"

namespace {

std::ofstream open_or_throw(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  return f;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hcpack: online edge coloring of the random graph process and Hamilton cycle packing"};
  hcpack::TrialConfig config;
  std::string validate = "fast";
  std::string mode;
  double d_full = 0, omega = 0, small_divisor = 0;

  app.set_config("--config", "", "key=value configuration file; command line flags take precedence");
  app.add_option("--n", config.n, "number of vertices")->check(CLI::Range(16u, 1u << 26));
  app.add_option("--sigma", config.sigma, "number of merged colors")->check(CLI::Range(2, 32));
  app.add_option("--epsilon", config.epsilon, "Full freeze time is eps n ln n");
  app.add_option("--seed", config.seed, "master seed");
  app.add_option("--trials", config.trials, "number of trials")->check(CLI::PositiveNumber);
  app.add_option("--parallelism", config.parallelism, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--validate", validate, "validation level")->check(CLI::IsMember({"off", "fast", "full"}));
  app.add_flag("--strict-boosters", config.strict_boosters, "extend only through boosters, no star closures");
  app.add_option("--dump-edges", config.dump_edges, "write the edge stream up to tau");
  app.add_option("--dump-colored", config.dump_colored, "write the colored edge log");
  app.add_option("--dump-cycles", config.dump_cycles, "write the Hamilton cycles found");
  app.add_option("--out", config.out, "JSON-lines trial log (default: stdout)");
  app.add_option("--summary", config.summary, "summary CSV");
  app.add_option("--mode", mode, "edge stream mode")->check(CLI::IsMember({"full-shuffle", "rejection"}));
  auto* d_full_opt = app.add_option("--d-full", d_full, "override the Full degree threshold");
  auto* omega_opt = app.add_option("--omega", omega, "override omega (default ln ln ln n)");
  app.add_option("--delta-exponent", config.delta_exponent, "|Full| >= n - n^x check exponent");
  auto* divisor_opt = app.add_option("--small-divisor", small_divisor, "SMALL threshold is ln n / divisor (default 100 q)");
  app.add_option("--expansion-alpha", config.expansion_alpha, "largest sampled set is alpha n");
  app.add_option("--expansion-samples", config.expansion_samples, "random sets per expansion check");
  app.add_option("--secondary-closures", config.secondary_closures, "secondary END searches per engine round");
  app.add_flag("--timings", config.record_timings, "record wall-clock per phase (breaks byte-identical logs)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    config.validation = hcpack::validation_level_from_string(validate);
    if (!mode.empty()) config.stream_mode = hcpack::stream_mode_from_string(mode);
    if (d_full_opt->count() > 0) config.d_full = static_cast<int>(d_full);
    if (omega_opt->count() > 0) config.omega = omega;
    if (divisor_opt->count() > 0) config.small_divisor = small_divisor;
    config.validate();

    std::ofstream out_file;
    if (!config.out.empty()) out_file = open_or_throw(config.out);
    std::ostream& out = config.out.empty() ? std::cout : out_file;
    const auto result = hcpack::run_experiment(config, [&](const std::string& line) { out << line << '\n'; });
    out.flush();
    if (!out) throw std::runtime_error("failed writing the trial log");

    if (!config.summary.empty()) {
      auto f = open_or_throw(config.summary);
      hcpack::write_summary_csv(f, result.summary);
    } else if (!config.out.empty()) {
      hcpack::write_summary_csv(std::cout, result.summary);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
