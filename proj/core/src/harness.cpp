#include "hcpack/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "hcpack/coloring.hpp"
#include "hcpack/formulas.hpp"
#include "hcpack/posa.hpp"
#include "hcpack/rng.hpp"

namespace hcpack {

using nlohmann::json;

std::string_view to_string(ValidationLevel level) {
  switch (level) {
    case ValidationLevel::kOff:
      return "off";
    case ValidationLevel::kFast:
      return "fast";
    case ValidationLevel::kFull:
      return "full";
  }
  return "unknown";
}

ValidationLevel validation_level_from_string(std::string_view s) {
  if (s == "off") return ValidationLevel::kOff;
  if (s == "fast") return ValidationLevel::kFast;
  if (s == "full") return ValidationLevel::kFull;
  throw InvalidParameter("unknown validation level: " + std::string(s));
}

double TrialConfig::effective_omega() const { return omega ? *omega : formulas::default_omega(n); }

StreamMode TrialConfig::effective_stream_mode() const {
  if (stream_mode) return *stream_mode;
  return n <= 10000 ? StreamMode::kFullShuffle : StreamMode::kRejection;
}

void TrialConfig::validate() const {
  if (n < 16) throw InvalidParameter("n must be >= 16");
  if (sigma < 2 || sigma > kMaxColors / 2) throw InvalidParameter("sigma must be in [2, 32]");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw InvalidParameter("epsilon must be in (0, 1)");
  if (trials < 1) throw InvalidParameter("trials must be >= 1");
  if (parallelism < 1) throw InvalidParameter("parallelism must be >= 1");
  if (d_full && *d_full < 1) throw InvalidParameter("d_full must be >= 1");
  if (omega && !(*omega > 0.0)) throw InvalidParameter("omega must be positive");
  if (!(delta_exponent > 0.0 && delta_exponent < 1.0)) throw InvalidParameter("delta exponent must be in (0, 1)");
  if (small_divisor && !(*small_divisor > 0.0)) throw InvalidParameter("small divisor must be positive");
  if (!(expansion_alpha >= 0.0 && expansion_alpha <= 1.0)) throw InvalidParameter("expansion alpha must be in [0, 1]");
  if (stream_mode && *stream_mode == StreamMode::kExplicit) throw InvalidParameter("explicit streams are test-only");
}

json to_json(const TrialConfig& c) {
  json j;
  j["n"] = c.n;
  j["sigma"] = c.sigma;
  j["epsilon"] = c.epsilon;
  j["seed"] = c.seed;
  j["trials"] = c.trials;
  j["parallelism"] = c.parallelism;
  j["strict_boosters"] = c.strict_boosters;
  j["validation"] = std::string(to_string(c.validation));
  j["stream_mode"] = c.stream_mode ? json(std::string(to_string(*c.stream_mode))) : json(nullptr);
  j["d_full"] = c.d_full ? json(*c.d_full) : json(nullptr);
  j["omega"] = c.omega ? json(*c.omega) : json(nullptr);
  j["delta_exponent"] = c.delta_exponent;
  j["small_divisor"] = c.small_divisor ? json(*c.small_divisor) : json(nullptr);
  j["expansion_alpha"] = c.expansion_alpha;
  j["expansion_samples"] = c.expansion_samples;
  j["secondary_closures"] = c.secondary_closures;
  j["record_timings"] = c.record_timings;
  j["dump_edges"] = c.dump_edges;
  j["dump_colored"] = c.dump_colored;
  j["dump_cycles"] = c.dump_cycles;
  j["out"] = c.out;
  j["summary"] = c.summary;
  return j;
}

TrialConfig trial_config_from_json(const json& j) {
  TrialConfig c;
  c.n = j.at("n").get<Vertex>();
  c.sigma = j.at("sigma").get<int>();
  c.epsilon = j.at("epsilon").get<double>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.trials = j.at("trials").get<std::size_t>();
  c.parallelism = j.at("parallelism").get<std::size_t>();
  c.strict_boosters = j.at("strict_boosters").get<bool>();
  c.validation = validation_level_from_string(j.at("validation").get<std::string>());
  if (!j.at("stream_mode").is_null()) c.stream_mode = stream_mode_from_string(j["stream_mode"].get<std::string>());
  if (!j.at("d_full").is_null()) c.d_full = j["d_full"].get<int>();
  if (!j.at("omega").is_null()) c.omega = j["omega"].get<double>();
  c.delta_exponent = j.at("delta_exponent").get<double>();
  if (!j.at("small_divisor").is_null()) c.small_divisor = j["small_divisor"].get<double>();
  c.expansion_alpha = j.at("expansion_alpha").get<double>();
  c.expansion_samples = j.at("expansion_samples").get<std::size_t>();
  c.secondary_closures = j.at("secondary_closures").get<std::size_t>();
  c.record_timings = j.at("record_timings").get<bool>();
  c.dump_edges = j.at("dump_edges").get<std::string>();
  c.dump_colored = j.at("dump_colored").get<std::string>();
  c.dump_cycles = j.at("dump_cycles").get<std::string>();
  c.out = j.at("out").get<std::string>();
  c.summary = j.at("summary").get<std::string>();
  return c;
}

json to_json(const TrialReport& r) {
  json j;
  j["trial"] = r.trial;
  j["seed"] = r.seed;
  j["n"] = r.n;
  j["sigma"] = r.sigma;
  j["epsilon"] = r.epsilon;
  j["tau"] = r.tau;
  j["t_eps"] = r.t_eps;
  j["eps_too_large"] = r.eps_too_large;
  j["full_size"] = r.full_size;
  j["full_success"] = r.full_success;
  json colors = json::array();
  for (const ColorOutcome& c : r.colors) {
    colors.push_back({{"success", c.success},
                      {"rounds", c.rounds},
                      {"boosters_used", c.boosters_used},
                      {"boosters_examined", c.boosters_examined},
                      {"star_closures", c.star_closures},
                      {"final_path_length", c.final_path_length},
                      {"star_edges", c.star_edges},
                      {"booster_pool", c.booster_pool},
                      {"cycle_checksum", c.cycle_checksum}});
  }
  j["colors"] = std::move(colors);
  json validators = json::object();
  for (const CheckResult& c : r.validators.checks) {
    validators[c.name] = {{"verdict", std::string(to_string(c.verdict))}, {"detail", c.detail}, {"witness", c.witness}};
  }
  j["validators"] = std::move(validators);
  j["timings_ms"] = r.timings_ms ? json(*r.timings_ms) : json(nullptr);
  return j;
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t trial) { return derive_seed(master, trial); }

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string cycle_checksum(std::span<const Vertex> cycle) {
  const std::size_t k = cycle.size();
  std::size_t start = 0;
  while (start < k && cycle[start] != 0) ++start;
  const bool forward = cycle[(start + 1) % k] < cycle[(start + k - 1) % k];
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (std::size_t s = 0; s < k; ++s) {
    const Vertex v = cycle[forward ? (start + s) % k : (start + k - s) % k];
    for (int b = 0; b < 4; ++b) {
      h ^= (v >> (8 * b)) & 0xffu;
      h *= 0x100000001b3ULL;
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

CheckResult tally_check(const std::string& name, const InvariantTally& t) {
  if (t.ok()) return CheckResult::pass(name, std::to_string(t.checks) + " checks");
  return CheckResult::fail(name, t.first_witness, {t.violations});
}

std::string numbered(const std::string& path, std::size_t trial, std::size_t trials) {
  return trials > 1 ? path + "." + std::to_string(trial) : path;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  return f;
}

struct Snapshot {
  std::uint64_t t = 0;
  std::vector<std::uint32_t> color_degrees;
  std::vector<std::uint32_t> degrees;
};

}  // namespace

TrialReport run_trial(const TrialConfig& config, std::size_t trial_index) {
  config.validate();
  const Vertex n = config.n;
  const int q = config.q();
  const double omega = config.effective_omega();
  const std::uint64_t seed = trial_seed(config.seed, trial_index);

  TrialReport report;
  report.trial = trial_index;
  report.seed = seed;
  report.n = n;
  report.sigma = config.sigma;
  report.epsilon = config.epsilon;
  std::map<std::string, double> timings;

  // Process and online coloring, interleaved.
  auto clock = Clock::now();
  EdgeStream stream = new_stream(n, derive_seed(seed, "process"), config.effective_stream_mode());
  ProcessState process(n, q);
  ColoringState coloring(n, ColoringParams{config.sigma, config.epsilon, derive_seed(seed, "coloring"), config.d_full});
  const auto m_target = static_cast<std::uint64_t>(std::floor(formulas::snapshot_time(n, q, omega)));
  const std::uint64_t half_eps = coloring.t_eps() / 2;
  Snapshot at_m;
  Snapshot at_half_eps;
  Snapshot at_teps;
  auto take = [&](Snapshot& s) {
    s.t = process.t();
    s.color_degrees.assign(coloring.color_degrees().begin(), coloring.color_degrees().end());
    s.degrees.assign(process.degrees().begin(), process.degrees().end());
  };
  if (half_eps == 0) take(at_half_eps);
  if (coloring.t_eps() == 0) take(at_teps);
  while (!process.threshold_reached()) {
    auto e = stream.next();
    if (!e) throw ExhaustedStream("stream ended before the hitting time");
    process.apply_edge(*e);
    const std::uint64_t t = process.t();
    if (process.threshold_reached() && !coloring.full_frozen()) {
      take(at_teps);
      if (at_half_eps.t == 0 && half_eps > 0) take(at_half_eps);
      coloring.freeze_full_early();
    }
    coloring.color_edge(*e, t);
    if (t == half_eps) take(at_half_eps);
    if (t == coloring.t_eps() && !coloring.eps_too_large()) take(at_teps);
    if (t == m_target) take(at_m);
  }
  const std::uint64_t tau = process.t();
  if (at_m.color_degrees.empty()) take(at_m);  // process stopped before m
  report.tau = tau;
  report.t_eps = coloring.t_eps();
  report.eps_too_large = coloring.eps_too_large();
  report.full_size = coloring.full().size();
  const auto edges = stream.produced().first(tau);
  if (!config.dump_edges.empty()) {
    auto f = open_out(numbered(config.dump_edges, trial_index, config.trials));
    dump_stream(f, n, stream.seed(), edges);
  }
  if (!config.dump_colored.empty()) {
    auto f = open_out(numbered(config.dump_colored, trial_index, config.trials));
    dump_colored_edges(f, coloring.log());
  }
  timings["process_coloring"] = ms_since(clock);

  // Hard invariants of the process and the coloring.
  ValidatorReport& vr = report.validators;
  {
    std::vector<std::uint32_t> deg(n, 0);
    for (std::uint64_t i = 0; i + 1 < tau; ++i) {
      ++deg[edges[i].u];
      ++deg[edges[i].v];
    }
    const auto before = *std::min_element(deg.begin(), deg.end());
    ++deg[edges[tau - 1].u];
    ++deg[edges[tau - 1].v];
    const auto after = *std::min_element(deg.begin(), deg.end());
    if (before < static_cast<std::uint32_t>(q) && after >= static_cast<std::uint32_t>(q)) {
      vr.add(CheckResult::pass("inv_hitting_minimality"));
    } else {
      vr.add(CheckResult::fail("inv_hitting_minimality",
                               "min degree " + std::to_string(before) + " -> " + std::to_string(after), {tau}));
    }
  }
  vr.add(tally_check("inv_need_monotone", coloring.invariants().need_monotone));
  {
    InvariantTally consistent = coloring.invariants().need_consistent;
    consistent.record(coloring.needs_consistent(), "C_v mismatch at termination");
    vr.add(tally_check("inv_need_consistent", consistent));
  }
  vr.add(tally_check("inv_booster_endpoints", coloring.invariants().booster_endpoints));
  vr.add(tally_check("inv_first_color_star", coloring.invariants().first_color_star));

  const MergedColoring merged = merge_colors(coloring);
  std::unordered_map<std::uint64_t, int> color_of;  // edge -> merged color, from the raw log
  {
    InvariantTally partition;
    const auto log = coloring.log();
    partition.record(log.size() == tau && merged.total_edges() == tau, "pool sizes do not add up to tau");
    std::vector<std::size_t> star_count(config.sigma, 0), plus_count(config.sigma, 0);
    for (std::size_t i = 0; i < log.size(); ++i) {
      const auto& ce = log[i];
      const int c = ce.assignment.color % config.sigma;
      partition.record(ce.edge == edges[i] && ce.t == i + 1, "log entry " + std::to_string(i) + " out of order");
      partition.record(color_of.emplace(ce.edge.key(), c).second, "edge colored twice");
      (ce.assignment.pool == Pool::kStar ? star_count : plus_count)[c]++;
    }
    for (int c = 0; c < config.sigma; ++c) {
      partition.record(star_count[c] == merged.classes[c].star.size() &&
                           plus_count[c] == merged.classes[c].boosters.size(),
                       "merged class " + std::to_string(c) + " size mismatch");
    }
    vr.add(tally_check("inv_pool_partition", partition));
  }

  // One Hamilton cycle per merged color.
  clock = Clock::now();
  std::vector<ColorClassGraph> class_graphs;
  class_graphs.reserve(config.sigma);
  InvariantTally posa;
  for (int c = 0; c < config.sigma; ++c) {
    class_graphs.emplace_back(n, merged.classes[c].star, merged.classes[c].boosters);
    EngineOptions opts;
    opts.strict_boosters = config.strict_boosters;
    opts.seed = derive_seed(derive_seed(seed, "engine"), static_cast<std::uint64_t>(c));
    opts.secondary_closure_limit = config.secondary_closures;
    const CycleResult r = find_hamilton_cycle(class_graphs.back(), opts);
    ColorOutcome out;
    out.success = r.success();
    out.rounds = r.stats.rounds;
    out.boosters_used = r.stats.boosters_used;
    out.boosters_examined = r.stats.boosters_examined;
    out.star_closures = r.stats.star_closures;
    out.posa_checks = r.stats.posa_checks;
    out.posa_violations = r.stats.posa_violations;
    out.final_path_length = r.final_path_length;
    out.star_edges = merged.classes[c].star.size();
    out.booster_pool = merged.classes[c].boosters.size();
    out.cycle = r.cycle;
    posa.checks += r.stats.posa_checks;
    if (r.stats.posa_violations > 0) {
      posa.record(false, "color " + std::to_string(c) + ": |N(END)| >= 2|END|");
      posa.violations += r.stats.posa_violations - 1;
    }
    report.colors.push_back(std::move(out));
  }
  vr.add(tally_check("inv_posa_bound", posa));

  // Re-verify every reported cycle against the raw colored edges.
  {
    InvariantTally sound;
    InvariantTally disjoint;
    std::unordered_set<std::uint64_t> used;
    for (int c = 0; c < config.sigma; ++c) {
      ColorOutcome& out = report.colors[c];
      if (!out.success) continue;
      bool ok = out.cycle.size() == n;
      std::vector<bool> seen(n, false);
      for (std::size_t i = 0; ok && i < n; ++i) {
        const Vertex a = out.cycle[i];
        const Vertex b = out.cycle[(i + 1) % n];
        ok = a < n && !seen[a] && a != b;
        if (!ok) break;
        seen[a] = true;
        const Edge e(a, b);
        auto it = color_of.find(e.key());
        ok = it != color_of.end() && it->second == c;
        disjoint.record(used.insert(e.key()).second, "edge shared between cycles");
      }
      sound.record(ok, "cycle of color " + std::to_string(c) + " is not a monochromatic Hamilton cycle");
      if (!ok) out.success = false;
      if (out.success) out.cycle_checksum = cycle_checksum(out.cycle);
    }
    vr.add(tally_check("inv_cycles_sound", sound));
    vr.add(tally_check("inv_cycles_disjoint", disjoint));
    report.full_success = sound.ok() && disjoint.ok() &&
                          std::all_of(report.colors.begin(), report.colors.end(), [](const auto& c) { return c.success; });
  }
  if (!config.dump_cycles.empty()) {
    auto f = open_out(numbered(config.dump_cycles, trial_index, config.trials));
    for (int c = 0; c < config.sigma; ++c) {
      if (report.colors[c].success) dump_cycle(f, c, report.colors[c].cycle);
    }
  }
  timings["engine"] = ms_since(clock);

  // Structural validators.
  clock = Clock::now();
  if (config.validation != ValidationLevel::kOff) {
    const Graph g_m(n, edges.first(at_m.t));
    const SmallClassification small = classify_small(g_m, q, config.small_divisor.value_or(0.0));
    std::optional<CheckResult> conn;
    for (int c = 0; c < config.sigma && !conn; ++c) {
      const Graph star(n, merged.classes[c].star);
      CheckResult r = connectivity_check(star, "connectivity");
      if (r.verdict == Verdict::kFail) {
        r.detail = "color " + std::to_string(c) + ": " + r.detail;
        conn = std::move(r);
      }
    }
    vr.add(conn ? *conn : CheckResult::pass("connectivity", "all star graphs connected"));
    for (CheckResult& r : star_degree_check(merged, coloring.star_degrees(), q, small, coloring.d_full())) {
      vr.add(std::move(r));
    }

    if (config.validation == ValidationLevel::kFull) {
      vr.add(find_small_structures(g_m, small));
      vr.add(degree_tail_check(g_m, q, omega, config.small_divisor.value_or(0.0)));
      vr.add(max_degree_check(g_m));
      vr.add(color_list_check(g_m, at_m.color_degrees, q));
      std::size_t full_prime = 0;
      for (Vertex v = 0; v < n; ++v) {
        bool all = true;
        for (int c = 0; c < q && all; ++c) {
          all = at_half_eps.color_degrees[static_cast<std::size_t>(v) * q + c] >=
                static_cast<std::uint32_t>(coloring.d_full());
        }
        full_prime += all ? 1 : 0;
      }
      for (CheckResult& r :
           full_size_check(n, q, config.epsilon, full_prime, coloring.full().size(), config.delta_exponent)) {
        vr.add(std::move(r));
      }
      vr.add(pool_size_check(merged, q));
      Rng vrng(derive_seed(seed, "validators"));
      ExpansionOptions eopts;
      eopts.alpha = config.expansion_alpha;
      eopts.samples = config.expansion_samples;
      std::optional<CheckResult> expansion;
      for (int c = 0; c < config.sigma && !expansion; ++c) {
        const Graph star(n, merged.classes[c].star);
        CheckResult r = expansion_sampler(star, eopts, vrng, "expansion");
        if (r.verdict != Verdict::kPass) {
          r.detail = "color " + std::to_string(c) + ": " + r.detail;
          expansion = std::move(r);
        }
      }
      vr.add(expansion ? *expansion : CheckResult::pass("expansion", "all colors"));
      const std::uint64_t late_from = std::min(at_teps.t, at_m.t);
      for (CheckResult& r : post_teps_degree_check(g_m, at_teps.degrees, edges.subspan(late_from, at_m.t - late_from),
                                                   coloring.full(), small, config.epsilon)) {
        vr.add(std::move(r));
      }
      vr.add(hitting_window_check(n, q, tau, omega));
    }
  }
  timings["validators"] = ms_since(clock);
  if (config.record_timings) report.timings_ms = std::move(timings);
  return report;
}

std::optional<double> ExperimentSummary::Counts::pass_rate() const {
  const std::size_t evaluated = pass + fail;
  if (evaluated == 0) return std::nullopt;
  return static_cast<double>(pass) / static_cast<double>(evaluated);
}

ExperimentSummary summarize(const std::vector<json>& records) {
  ExperimentSummary s;
  s.trials = records.size();
  if (records.empty()) return s;
  s.n = records.front().at("n").get<Vertex>();
  s.sigma = records.front().at("sigma").get<int>();
  s.epsilon = records.front().at("epsilon").get<double>();
  s.color_success_rates.assign(s.sigma, 0.0);
  std::size_t full = 0;
  std::uint64_t tau_sum = 0;
  s.min_tau = ~std::uint64_t{0};
  std::vector<std::size_t> color_ok(s.sigma, 0);
  for (const json& r : records) {
    const auto tau = r.at("tau").get<std::uint64_t>();
    tau_sum += tau;
    s.min_tau = std::min(s.min_tau, tau);
    s.max_tau = std::max(s.max_tau, tau);
    full += r.at("full_success").get<bool>() ? 1 : 0;
    const auto& colors = r.at("colors");
    for (int c = 0; c < s.sigma; ++c) color_ok[c] += colors.at(c).at("success").get<bool>() ? 1 : 0;
    for (const auto& [name, v] : r.at("validators").items()) {
      auto& counts = s.validators[name];
      const auto verdict = v.at("verdict").get<std::string>();
      if (verdict == "pass") {
        ++counts.pass;
      } else if (verdict == "fail") {
        ++counts.fail;
      } else {
        ++counts.skipped;
      }
    }
  }
  const auto trials = static_cast<double>(s.trials);
  s.full_success_rate = static_cast<double>(full) / trials;
  s.mean_tau = static_cast<double>(tau_sum) / trials;
  s.norm_tau = s.mean_tau / formulas::tau_reference(s.n, 2 * s.sigma);
  for (int c = 0; c < s.sigma; ++c) s.color_success_rates[c] = static_cast<double>(color_ok[c]) / trials;
  return s;
}

void write_summary_csv(std::ostream& out, const ExperimentSummary& s) {
  auto fixed = [](double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return std::string(buf);
  };
  out << "n,sigma,epsilon,trials,full_success_rate,mean_tau,norm_tau,min_tau,max_tau,color_success_rates";
  for (const auto& [name, counts] : s.validators) out << ',' << name << "_pass_rate";
  out << '\n';
  out << s.n << ',' << s.sigma << ',' << fixed(s.epsilon) << ',' << s.trials << ',' << fixed(s.full_success_rate)
      << ',' << fixed(s.mean_tau) << ',' << fixed(s.norm_tau) << ',' << s.min_tau << ',' << s.max_tau << ',';
  for (std::size_t c = 0; c < s.color_success_rates.size(); ++c) {
    out << (c ? ";" : "") << fixed(s.color_success_rates[c]);
  }
  for (const auto& [name, counts] : s.validators) {
    out << ',';
    if (auto rate = counts.pass_rate()) out << fixed(*rate);
  }
  out << '\n';
}

ExperimentResult run_experiment(const TrialConfig& config, const std::function<void(const std::string&)>& sink) {
  config.validate();
  const std::size_t trials = config.trials;
  std::vector<std::optional<std::string>> lines(trials);
  std::size_t next_to_emit = 0;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;

  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= trials) return;
      std::string line;
      try {
        line = to_json(run_trial(config, i)).dump();
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        next.store(trials);
        return;
      }
      std::lock_guard lock(mu);
      lines[i] = std::move(line);
      while (next_to_emit < trials && lines[next_to_emit]) {
        if (sink) sink(*lines[next_to_emit]);
        ++next_to_emit;
      }
    }
  };

  const std::size_t threads = std::min(config.parallelism, trials);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  ExperimentResult result;
  std::vector<json> records;
  records.reserve(trials);
  for (auto& l : lines) {
    records.push_back(json::parse(*l));
    result.log_lines.push_back(std::move(*l));
  }
  result.summary = summarize(records);
  return result;
}

std::vector<json> read_trial_log(std::istream& in) {
  std::vector<json> records;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) records.push_back(json::parse(line));
  }
  return records;
}

}  // namespace hcpack
