#ifndef HCPACK_POSA_HPP
#define HCPACK_POSA_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hcpack/types.hpp"

namespace hcpack {

/// One merged color class: the star subgraph in CSR form plus the booster
/// list in arrival order. Immutable once built.
class ColorClassGraph {
 public:
  ColorClassGraph(Vertex n, std::span<const Edge> star, std::vector<Edge> boosters = {});

  Vertex n() const { return n_; }
  std::span<const Vertex> star_neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::uint32_t star_degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_star_edge(Vertex a, Vertex b) const;
  std::uint64_t star_edge_count() const { return targets_.size() / 2; }
  std::span<const Edge> boosters() const { return boosters_; }

 private:
  Vertex n_;
  std::vector<std::uint32_t> offsets_;
  std::vector<Vertex> targets_;
  std::vector<Edge> boosters_;
};

/// Simple path with O(1) membership and position lookup.
class PathState {
 public:
  explicit PathState(Vertex n);
  PathState(Vertex n, std::span<const Vertex> sequence);

  std::span<const Vertex> vertices() const { return seq_; }
  std::size_t size() const { return seq_.size(); }
  bool empty() const { return seq_.empty(); }
  Vertex front() const { return seq_.front(); }
  Vertex back() const { return seq_.back(); }
  Vertex operator[](std::size_t i) const { return seq_[i]; }
  bool contains(Vertex v) const { return pos_[v] != kAbsent; }
  std::size_t position(Vertex v) const { return pos_[v]; }

  void push_back(Vertex v);
  void push_front(Vertex v);
  void reverse() { reverse_range(0, seq_.size()); }
  /// Reverses seq[first, last).
  void reverse_range(std::size_t first, std::size_t last);

  friend bool operator==(const PathState& a, const PathState& b) { return a.seq_ == b.seq_; }

 private:
  static constexpr std::uint32_t kAbsent = static_cast<std::uint32_t>(-1);
  std::vector<Vertex> seq_;
  std::vector<std::uint32_t> pos_;
};

/// Posa rotation with x_1 fixed. i is 1-based; requires 2 <= i <= k-2 and
/// the star edge {x_i, x_k}. Throws InvalidRotation otherwise.
PathState rotate(const ColorClassGraph& g, const PathState& path, std::size_t i);

/// Rotation closure for one fixed endpoint. Every discovered endpoint keeps a
/// parent pointer and the pivot that produced it, so its path can be replayed.
struct RotationTree {
  Vertex fixed = kNoVertex;
  std::vector<Vertex> base;       // fixed endpoint first
  std::vector<Vertex> endpoints;  // discovery order; base.back() first
  std::vector<Vertex> parent;     // kNoVertex when not in END
  std::vector<Vertex> pivot;
  bool complete = false;  // false when the search stopped at an extension

  // A path one vertex longer, when some endpoint (or the fixed one) had an
  // outside star neighbor.
  std::optional<std::vector<Vertex>> extension;
  // A path whose two ends are joined by a star edge, if one was seen.
  std::optional<std::vector<Vertex>> closure;
  // Exact searches store one realizing path per endpoint instead of pivots.
  std::unordered_map<Vertex, std::vector<Vertex>> stored_paths;

  bool contains(Vertex b) const { return b < parent.size() && parent[b] != kNoVertex; }
  std::size_t size() const { return endpoints.size(); }
  /// Replays the rotations leading to endpoint b; the result runs fixed ... b.
  PathState path_to(Vertex b) const;
};

struct EndSetOptions {
  bool stop_at_extension = true;
  bool record_closure = true;
  // Deduplicate on whole paths rather than endpoints. The default search
  // expands each endpoint once, from the first path that reached it, and can
  // miss endpoints only reachable through a different path to the same end.
  // Exact search is exponential; it is meant for small graphs.
  bool exact = false;
  std::size_t max_states = 1u << 20;  // exact only; complete = false past it
};

/// Explores endpoints reachable by rotations from `path` with `fixed` held in
/// place, using star edges only. The result is a subset of END(fixed), equal
/// to it when options.exact is set and the search completes.
RotationTree compute_end_set(const ColorClassGraph& g, const PathState& path, Vertex fixed,
                             const EndSetOptions& options = {});

/// Number of vertices outside END(a) with a star neighbor inside it.
std::size_t end_set_neighborhood(const ColorClassGraph& g, const RotationTree& tree);

/// Longer path from the rotation tree, or nullopt if no endpoint (nor the
/// fixed end) has a star neighbor off the path.
std::optional<PathState> extend_path(const ColorClassGraph& g, const RotationTree& tree);

struct EngineOptions {
  bool strict_boosters = false;
  std::uint64_t seed = 0;
  // Bound on secondary END(b) searches per round when looking for star closures.
  std::size_t secondary_closure_limit = 32;
  bool validate_paths = false;
};

struct EngineStats {
  std::uint64_t rounds = 0;
  std::uint64_t extensions = 0;
  std::uint64_t star_closures = 0;
  std::uint64_t boosters_used = 0;
  std::uint64_t boosters_examined = 0;
  std::uint64_t posa_checks = 0;
  std::uint64_t posa_violations = 0;
};

/// Engine state carried between rounds.
struct RotationState {
  PathState path;
  std::size_t cursor = 0;  // next booster to examine
  std::unordered_set<std::uint64_t> applied;  // boosters that became cycle edges
  std::optional<RotationTree> primary;
  std::unordered_map<Vertex, RotationTree> secondary;  // END(x), per round
  EngineStats stats;

  explicit RotationState(Vertex n) : path(n) {}
};

enum class CycleOutcome { kHamiltonCycle, kFailure };

struct CycleResult {
  CycleOutcome outcome = CycleOutcome::kFailure;
  std::vector<Vertex> cycle;
  std::size_t final_path_length = 0;
  EngineStats stats;

  bool success() const { return outcome == CycleOutcome::kHamiltonCycle; }
};

/// Result of one booster scan.
struct BoosterStep {
  enum class Kind { kHamiltonCycle, kLongerPath, kExhausted } kind = Kind::kExhausted;
  std::vector<Vertex> cycle;  // set for kHamiltonCycle
};

/// Scans boosters from state.cursor. On kLongerPath, state.path has grown by one.
/// Requires state.primary to hold END(a) for state.path.
BoosterStep try_boosters(const ColorClassGraph& g, RotationState& state, const EngineOptions& options = {});

CycleResult find_hamilton_cycle(const ColorClassGraph& g, const EngineOptions& options = {});

/// True iff `cycle` visits every vertex once and each of its edges is a star
/// edge or one of `boosters`.
bool verify_hamilton_cycle(const ColorClassGraph& g, std::span<const Vertex> cycle,
                           const std::unordered_set<std::uint64_t>& boosters);

/// "c v_0 v_1 ... v_{n-1}".
void dump_cycle(std::ostream& out, int color, std::span<const Vertex> cycle);

}  // namespace hcpack

#endif  // HCPACK_POSA_HPP
