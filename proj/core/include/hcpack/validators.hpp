#ifndef HCPACK_VALIDATORS_HPP
#define HCPACK_VALIDATORS_HPP

// Empirical checks of the structural claims behind COL and the rotation
// phase. Each check is a pure function of immutable snapshots and returns a
// verdict; a failing verdict always carries a witness that was re-verified
// against the input before being reported.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hcpack/coloring.hpp"
#include "hcpack/rng.hpp"
#include "hcpack/types.hpp"

namespace hcpack {

/// Static simple graph with sorted adjacency lists.
class Graph {
 public:
  Graph(Vertex n, std::span<const Edge> edges);

  Vertex n() const { return static_cast<Vertex>(adjacency_.size()); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::uint32_t degree(Vertex v) const { return static_cast<std::uint32_t>(adjacency_[v].size()); }
  bool has_edge(Vertex a, Vertex b) const;
  std::uint64_t edge_count() const { return edges_; }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::uint64_t edges_ = 0;
};

enum class Verdict { kPass, kFail, kSkipped };
std::string_view to_string(Verdict v);

struct CheckResult {
  std::string name;
  Verdict verdict = Verdict::kSkipped;
  std::string detail;
  std::vector<std::uint64_t> witness;

  static CheckResult pass(std::string name, std::string detail = {});
  static CheckResult fail(std::string name, std::string detail, std::vector<std::uint64_t> witness);
  static CheckResult skipped(std::string name, std::string reason);
};

struct ValidatorReport {
  std::vector<CheckResult> checks;

  void add(CheckResult r) { checks.push_back(std::move(r)); }
  const CheckResult* find(std::string_view name) const;
};

struct SmallClassification {
  int threshold = 0;  // floor(ln n / divisor)
  std::vector<bool> small;
  std::vector<Vertex> small_vertices;
  bool vacuous() const { return threshold < 1; }
  bool is_small(Vertex v) const { return small[v]; }
};

/// SMALL = {v : d(v) < floor(ln n / divisor)}; divisor defaults to 100 q.
SmallClassification classify_small(const Graph& g, int q, double divisor = 0.0);

/// Edge or short path between small vertices, C3/C4 through a small vertex,
/// two triangles sharing a vertex.
CheckResult find_small_structures(const Graph& g, const SmallClassification& small);

/// Fewer than nu_k vertices of degree k for k in [q-1, floor(ln n / divisor)].
CheckResult degree_tail_check(const Graph& g, int q, double omega, double divisor = 0.0);

/// max degree < 20 ln n.
CheckResult max_degree_check(const Graph& g);

/// |C_v| = max(0, q - d(v)) at the snapshot; covers theta_v for d(v) >= q-1.
/// color_degrees is the n*q table at the same snapshot.
CheckResult color_list_check(const Graph& g, std::span<const std::uint32_t> color_degrees, int q);

/// Tier 1: every merged star degree >= 2. Tier 2: LARGE vertices have star
/// degree >= d_full in every internal color.
std::vector<CheckResult> star_degree_check(const MergedColoring& merged, std::span<const std::uint32_t> star_degrees,
                                           int q, const SmallClassification& small, int d_full);

/// |Full'| >= n - 203 q n / (eps ln n) and |Full| >= n - n^exponent.
std::vector<CheckResult> full_size_check(Vertex n, int q, double eps, std::size_t full_prime_size,
                                         std::size_t full_size, double exponent);

/// Each merged class has star and booster pools of size >= n ln n / (8q).
CheckResult pool_size_check(const MergedColoring& merged, int q);

struct ExpansionOptions {
  double alpha = 0.0;           // sets up to floor(alpha n) are sampled
  std::size_t samples = 1000;   // uniform random sets
  std::size_t greedy_seeds = 8;
  std::size_t greedy_max_size = 256;
  std::size_t max_pair_vertices = 64;
};

/// Sampled |N(S)| >= 2|S| and e(R) <= 2|R| for |R| <= n/(ln n)^3.
CheckResult expansion_sampler(const Graph& star, const ExpansionOptions& options, Rng& rng,
                              std::string name = "expansion");

CheckResult connectivity_check(const Graph& star, std::string name = "connectivity");

/// No vertex outside Full with >= eps ln n/200 late edges of which <= eps ln n/400
/// go to Full; no LARGE vertex with fewer than eps ln n/200 late edges.
/// late_edges are the edges with t_eps < t <= m.
std::vector<CheckResult> post_teps_degree_check(const Graph& at_m, std::span<const std::uint32_t> degree_at_teps,
                                                std::span<const Edge> late_edges, const FullSet& full,
                                                const SmallClassification& small, double eps);

/// m <= tau <= m + 2 omega n; only evaluated for n >= min_n.
CheckResult hitting_window_check(Vertex n, int q, std::uint64_t tau, double omega, Vertex min_n = 10000);

}  // namespace hcpack

#endif  // HCPACK_VALIDATORS_HPP
