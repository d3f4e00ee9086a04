#ifndef HCPACK_COLORING_HPP
#define HCPACK_COLORING_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hcpack/rng.hpp"
#include "hcpack/types.hpp"

namespace hcpack {

using ColorMask = std::uint64_t;
inline constexpr int kMaxColors = 64;

enum class Pool : std::uint8_t { kStar, kPlus };

/// Which branch of COL produced a color.
enum class ColStep : std::uint8_t {
  kMinDegree = 2,  // one endpoint Full: least-used color at the other one
  kFullPair = 3,   // both Full: uniform color, pool by coin flip
  kUniform = 4,    // before t_eps, or neither endpoint Full
  kNeed = 5,       // some endpoint still needs a color
};

std::string_view to_string(Pool pool);

struct ColorAssignment {
  int color = 0;
  Pool pool = Pool::kStar;
  ColStep step = ColStep::kUniform;
};

struct ColoredEdge {
  Edge edge;
  std::uint64_t t = 0;
  ColorAssignment assignment;
};

/// Vertices that had every internal color at degree >= d_full when frozen.
class FullSet {
 public:
  FullSet() = default;
  FullSet(std::vector<bool> members, std::uint64_t freeze_time, int d_full);

  bool contains(Vertex v) const { return members_[v]; }
  std::size_t size() const { return size_; }
  std::uint64_t freeze_time() const { return freeze_time_; }
  int d_full() const { return d_full_; }
  const std::vector<bool>& members() const { return members_; }

 private:
  std::vector<bool> members_;
  std::size_t size_ = 0;
  std::uint64_t freeze_time_ = 0;
  int d_full_ = 1;
};

struct ColoringParams {
  int sigma = 2;
  double epsilon = 0.1;
  std::uint64_t seed = 0;
  std::optional<int> d_full_override;
};

/// Running tally of per-edge invariant checks; first failure is kept as a witness.
struct InvariantTally {
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::string first_witness;

  void record(bool ok, const std::string& witness_if_bad);
  bool ok() const { return violations == 0; }
};

struct ColoringInvariants {
  InvariantTally need_monotone;      // sum |C_v| non-increasing, strict on need steps
  InvariantTally need_consistent;    // c in C_v <=> d_c(v) == 0
  InvariantTally booster_endpoints;  // plus edges join two Full vertices
  InvariantTally first_color_star;   // first edge of color c at v is a star edge
};

/// The online coloring state machine with q = 2 sigma internal colors.
class ColoringState {
 public:
  ColoringState(Vertex n, const ColoringParams& params);

  Vertex n() const { return n_; }
  int sigma() const { return sigma_; }
  int q() const { return q_; }
  double epsilon() const { return epsilon_; }
  int d_full() const { return d_full_; }
  /// Scheduled freeze time floor(eps n ln n), or the earlier time set by freeze_full_early.
  std::uint64_t t_eps() const { return t_eps_; }
  std::uint64_t t() const { return t_; }
  bool eps_too_large() const { return eps_too_large_; }

  std::uint32_t color_degree(Vertex v, int c) const { return color_degree_[index(v, c)]; }
  std::uint32_t star_degree(Vertex v, int c) const { return star_degree_[index(v, c)]; }
  ColorMask needs(Vertex v) const { return need_[v]; }
  std::uint64_t total_need() const { return total_need_; }

  bool full_frozen() const { return full_.has_value(); }
  const FullSet& full() const;

  /// Freezes Full from the current color degrees. Legal only once and only at t == t_eps.
  const FullSet& freeze_full();

  /// Freezes Full at the current time, before t_eps. Used when the process
  /// stops before t_eps; marks the run as eps-too-large.
  const FullSet& freeze_full_early();

  /// Colors edge number t (must be t() + 1). Freezes Full right after edge t_eps.
  ColorAssignment color_edge(const Edge& e, std::uint64_t t);

  std::span<const ColoredEdge> log() const { return log_; }
  std::span<const std::uint32_t> color_degrees() const { return color_degree_; }
  std::span<const std::uint32_t> star_degrees() const { return star_degree_; }
  const ColoringInvariants& invariants() const { return invariants_; }

  /// Re-derives C_v from color degrees for every vertex.
  bool needs_consistent() const;

 private:
  std::size_t index(Vertex v, int c) const { return static_cast<std::size_t>(v) * q_ + c; }
  int pick_from_mask(ColorMask mask);
  void check_needs_consistent();

  Vertex n_;
  int sigma_;
  int q_;
  double epsilon_;
  int d_full_;
  std::uint64_t t_eps_;
  std::uint64_t t_ = 0;
  bool eps_too_large_ = false;
  Rng rng_;
  std::vector<std::uint32_t> color_degree_;
  std::vector<std::uint32_t> star_degree_;
  std::vector<ColorMask> need_;
  std::uint64_t total_need_;
  std::optional<FullSet> full_;
  std::vector<ColoredEdge> log_;
  ColoringInvariants invariants_;
};

ColoringState init_coloring(Vertex n, int sigma, double epsilon, std::uint64_t seed);

/// Index of the smallest entry; the lowest index wins ties.
int min_degree_color(std::span<const std::uint32_t> color_degrees);

/// Colors c and c + sigma merged into one class.
struct MergedClass {
  std::vector<Edge> star;
  std::vector<Edge> boosters;  // arrival order
};

struct MergedColoring {
  Vertex n = 0;
  int sigma = 0;
  std::vector<MergedClass> classes;

  std::uint64_t total_edges() const;
};

MergedColoring merge_colors(const ColoringState& state);

/// "t u v internal_color pool" per colored edge.
void dump_colored_edges(std::ostream& out, std::span<const ColoredEdge> edges);

}  // namespace hcpack

#endif  // HCPACK_COLORING_HPP
