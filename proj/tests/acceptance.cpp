// Acceptance suite: one PASS/FAIL line per criterion, exit code 1 if any fails.
// Every run uses master seed 1; seeds are fixed before looking at results.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hcpack/formulas.hpp"
#include "hcpack/hamilton_oracle.hpp"
#include "hcpack/harness.hpp"
#include "hcpack/posa.hpp"
#include "oracles.hpp"

using namespace hcpack;

namespace {

constexpr std::uint64_t kMasterSeed = 1;

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  std::printf("%s criterion %d (%s): %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
  std::fflush(stdout);
  failures += !ok;
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

std::vector<TrialReport> run_trials(const TrialConfig& c) {
  std::vector<TrialReport> out;
  out.reserve(c.trials);
  for (std::size_t i = 0; i < c.trials; ++i) out.push_back(run_trial(c, i));
  return out;
}

// Hamiltonicity and pairwise disjointness of the reported cycles, checked
// here without the library's own verifier.
bool cycles_ok(const TrialReport& r, std::string& why) {
  std::set<Edge> used;
  for (std::size_t c = 0; c < r.colors.size(); ++c) {
    const auto& o = r.colors[c];
    if (!o.success) continue;
    std::vector<bool> seen(r.n, false);
    if (o.cycle.size() != r.n) {
      why = "cycle of length " + std::to_string(o.cycle.size());
      return false;
    }
    for (Vertex v : o.cycle) {
      if (v >= r.n || seen[v]) {
        why = "vertex repeated in cycle";
        return false;
      }
      seen[v] = true;
    }
    for (std::size_t k = 0; k < o.cycle.size(); ++k) {
      if (!used.insert(Edge(o.cycle[k], o.cycle[(k + 1) % o.cycle.size()])).second) {
        why = "edge shared between cycles";
        return false;
      }
    }
  }
  return true;
}

void criterion1() {
  std::size_t trials = 0, bad = 0;
  std::string first;
  for (Vertex n : {256u, 1024u, 4096u}) {
    for (int sigma : {2, 3}) {
      TrialConfig c;
      c.n = n;
      c.sigma = sigma;
      c.seed = kMasterSeed;
      c.trials = 100;
      c.validation = ValidationLevel::kOff;
      for (const TrialReport& r : run_trials(c)) {
        ++trials;
        std::string why;
        bool ok = cycles_ok(r, why);
        for (const CheckResult& check : r.validators.checks) {
          if (check.name.rfind("inv_", 0) == 0 && check.verdict != Verdict::kPass) {
            ok = false;
            why = check.name + ": " + check.detail;
          }
        }
        if (!ok) {
          ++bad;
          if (first.empty()) first = "n=" + std::to_string(n) + " sigma=" + std::to_string(sigma) + " trial " +
                                     std::to_string(r.trial) + " " + why;
        }
      }
    }
  }
  report(1, "soundness invariants", bad == 0,
         std::to_string(trials - bad) + "/" + std::to_string(trials) + " trials clean" +
             (first.empty() ? "" : "; first: " + first));
}

void criterion2() {
  std::mt19937_64 rng(kMasterSeed);
  int unsound = 0, eligible = 0, found = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const Vertex n = 5 + static_cast<Vertex>(rng() % 8);  // 5..12
    const double p = 0.2 + 0.4 * static_cast<double>(rng() % 100) / 100.0;
    const auto edges = oracle::random_graph_min_degree(n, p, 2, rng);
    const ColorClassGraph g(n, edges);
    const CycleResult r = find_hamilton_cycle(g, EngineOptions{.seed = static_cast<std::uint64_t>(trial)});
    const bool hamiltonian = brute_force_hamilton(n, edges).hamiltonian;
    if (r.success() && !hamiltonian) ++unsound;
    if (hamiltonian && oracle::connected(n, edges)) {
      ++eligible;
      found += r.success();
    }
  }
  const auto petersen = oracle::petersen();
  const bool petersen_engine_fails = !find_hamilton_cycle(ColorClassGraph(10, petersen)).success();
  const bool petersen_oracle_no = !brute_force_hamilton(10, petersen).hamiltonian;
  const double rate = eligible ? static_cast<double>(found) / eligible : 0.0;
  report(2, "oracle equivalence",
         unsound == 0 && eligible > 0 && rate >= 0.95 && petersen_engine_fails && petersen_oracle_no,
         "unsound successes " + std::to_string(unsound) + ", success on Hamiltonian connected " +
             std::to_string(found) + "/" + std::to_string(eligible) + " = " + fmt(rate) + " (need >= 0.95), Petersen " +
             (petersen_engine_fails && petersen_oracle_no ? "rejected by both" : "MISMATCH"));
}

void criterion3(std::uint64_t engine_posa_checks, std::uint64_t engine_posa_violations) {
  // Fixed example, 1-based positions: P = (1,2,3,4,5), star edge {2,5}, i = 2.
  const std::vector<Edge> example{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 5}};
  const ColorClassGraph g(6, example);
  const PathState p(6, std::vector<Vertex>{1, 2, 3, 4, 5});
  const PathState rotated = rotate(g, p, 2);
  const std::vector<Vertex> want{1, 2, 5, 4, 3};
  const bool example_ok = std::equal(want.begin(), want.end(), rotated.vertices().begin(), rotated.vertices().end());

  std::mt19937_64 rng(kMasterSeed);
  int involutions = 0, applied = 0;
  while (applied < 1000) {
    const Vertex n = 6 + static_cast<Vertex>(rng() % 20);
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    std::shuffle(order.begin(), order.end(), rng);
    const std::size_t i = 2 + rng() % (n - 3);  // 2 .. n-2
    std::vector<Edge> edges;
    for (std::size_t k = 0; k + 1 < n; ++k) edges.emplace_back(order[k], order[k + 1]);
    edges.emplace_back(order[i - 1], order[n - 1]);
    const ColorClassGraph h(n, edges);
    const PathState start(n, order);
    const PathState once = rotate(h, start, i);
    const PathState twice = rotate(h, once, i);
    involutions += std::equal(order.begin(), order.end(), twice.vertices().begin(), twice.vertices().end());
    ++applied;
  }

  // Completed no-extension searches on random graphs.
  std::uint64_t checks = 0, violations = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    const Vertex n = 8 + static_cast<Vertex>(rng() % 200);
    const double deg = 2.0 + static_cast<double>(rng() % 40) / 10.0;
    const auto edges = oracle::random_graph_min_degree(n, deg / n, 1, rng);
    const ColorClassGraph h(n, edges);
    const CycleResult r = find_hamilton_cycle(h, EngineOptions{.seed = static_cast<std::uint64_t>(trial)});
    checks += r.stats.posa_checks;
    violations += r.stats.posa_violations;
  }
  checks += engine_posa_checks;
  violations += engine_posa_violations;
  report(3, "rotation unit", example_ok && involutions == 1000 && violations == 0 && checks > 0,
         std::string("example ") + (example_ok ? "ok" : "WRONG") + ", involutions " + std::to_string(involutions) +
             "/1000, Posa bound violations " + std::to_string(violations) + " in " + std::to_string(checks) +
             " completed searches");
}

double full_success(const std::vector<TrialReport>& rs) {
  std::size_t ok = 0;
  for (const auto& r : rs) ok += r.full_success;
  return static_cast<double>(ok) / static_cast<double>(rs.size());
}

void criterion4(const std::map<Vertex, std::vector<TrialReport>>& sweep) {
  const double top = full_success(sweep.at(4096));
  std::string detail = "n=4096 full success " + fmt(top) + " (need >= 0.8); sweep";
  bool monotone = true;
  double prev = -1.0;
  for (const auto& [n, rs] : sweep) {
    const double rate = full_success(rs);
    detail += " " + std::to_string(n) + ":" + fmt(rate);
    if (prev >= 0.0) {
      // A drop larger than one binomial sd of the previous point breaks the trend.
      const double sd = std::sqrt(prev * (1.0 - prev) / static_cast<double>(rs.size()));
      if (rate < prev - sd) monotone = false;
    }
    prev = rate;
  }
  detail += monotone ? " non-decreasing within 1 sd" : " DECREASES by more than 1 sd";
  report(4, "end-to-end success", top >= 0.8 && monotone, detail);
}

void criterion5() {
  TrialConfig c;
  c.n = 10000;
  c.sigma = 2;
  c.seed = kMasterSeed;
  c.trials = 20;
  c.validation = ValidationLevel::kOff;
  const double ref = formulas::tau_reference(c.n, c.q());
  int within = 0;
  double lo = 1e300, hi = 0;
  for (const TrialReport& r : run_trials(c)) {
    const double ratio = static_cast<double>(r.tau) / ref;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    within += std::abs(ratio - 1.0) <= 0.15;
  }
  report(5, "hitting-time calibration", within >= 18,
         std::to_string(within) + "/20 within 15% of reference " + fmt(ref) + " (need >= 18); tau/ref in [" +
             fmt(lo) + ", " + fmt(hi) + "]");
}

void criterion6(const std::vector<TrialReport>& rs) {
  const Vertex n = 4096;
  const int q = 4;
  const double eps = 0.1;
  std::map<std::string, std::size_t> pass;
  for (const auto& r : rs) {
    for (const auto& check : r.validators.checks) pass[check.name] += check.verdict == Verdict::kPass;
  }
  const double total = static_cast<double>(rs.size());
  auto rate = [&](const std::string& name) { return static_cast<double>(pass[name]) / total; };

  // Checks whose thresholds round to nothing at this n must be skipped.
  std::vector<std::string> vacuous;
  if (formulas::small_threshold(n, 100.0 * q) < 1) vacuous.insert(vacuous.end(), {"small_structures", "degree_tail"});
  if (formulas::full_prime_bound(n, q, eps) <= 0) vacuous.push_back("full_prime_size");
  if (formulas::full_bound(n, 0.9) <= 0) vacuous.push_back("full_size");
  if (eps * std::log(static_cast<double>(n)) / 200.0 < 1) {
    vacuous.insert(vacuous.end(), {"late_edges_to_full", "late_degree_large"});
  }
  std::size_t vacuous_reported_pass = 0;
  for (const auto& r : rs) {
    for (const auto& name : vacuous) {
      const CheckResult* check = r.validators.find(name);
      if (check == nullptr || check->verdict != Verdict::kSkipped) ++vacuous_reported_pass;
    }
  }

  const std::vector<std::pair<std::string, double>> required{{"connectivity", 0.9},
                                                             {"star_degree_merged", 0.9},
                                                             {"expansion", 0.9},
                                                             {"color_lists", 0.9},
                                                             {"max_degree", 1.0}};
  bool ok = vacuous_reported_pass == 0;
  std::string detail;
  for (const auto& [name, need] : required) {
    const double got = rate(name);
    ok &= got >= need;
    detail += name + " " + fmt(got) + (got >= need ? "" : " (< " + fmt(need) + ")") + ", ";
  }
  detail += std::to_string(vacuous.size()) + " vacuous checks, " + std::to_string(vacuous_reported_pass) +
            " not reported as skipped";
  report(6, "validator pass rates", ok, detail);
}

void criterion7() {
  TrialConfig c;
  c.n = 1024;
  c.sigma = 2;
  c.seed = kMasterSeed;
  c.trials = 16;
  c.validation = ValidationLevel::kFull;
  auto log = [](const ExperimentResult& r) {
    std::ostringstream out;
    for (const auto& l : r.log_lines) out << l << '\n';
    return out.str();
  };
  const std::string a = log(run_experiment(c));
  const std::string b = log(run_experiment(c));
  c.parallelism = 8;
  const std::string p8 = log(run_experiment(c));
  report(7, "reproducibility", a == b && a == p8,
         std::string("rerun ") + (a == b ? "identical" : "DIFFERS") + ", parallelism 1 vs 8 " +
             (a == p8 ? "identical" : "DIFFERS") + " (" + std::to_string(a.size()) + " bytes)");
}

}  // namespace

int main() {
  try {
    criterion1();
    criterion2();

    // Shared runs for criteria 3, 4 and 6. Validation level does not change the
    // engine outcome, so the n=4096 full-validation runs serve both.
    std::map<Vertex, std::vector<TrialReport>> sweep;
    for (Vertex n : {512u, 1024u, 2048u, 4096u}) {
      TrialConfig c;
      c.n = n;
      c.sigma = 2;
      c.epsilon = 0.1;
      c.seed = kMasterSeed;
      c.trials = 50;
      c.validation = n == 4096 ? ValidationLevel::kFull : ValidationLevel::kFast;
      sweep[n] = run_trials(c);
    }
    std::uint64_t posa_checks = 0, posa_violations = 0;
    for (const auto& [n, rs] : sweep) {
      for (const auto& r : rs) {
        for (const auto& o : r.colors) {
          posa_checks += o.posa_checks;
          posa_violations += o.posa_violations;
        }
      }
    }
    criterion3(posa_checks, posa_violations);
    criterion4(sweep);
    criterion5();
    criterion6(sweep.at(4096));
    criterion7();
  } catch (const std::exception& e) {
    std::printf("FAIL acceptance aborted: %s\n", e.what());
    return 1;
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
