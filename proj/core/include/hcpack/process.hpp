#ifndef HCPACK_PROCESS_HPP
#define HCPACK_PROCESS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "hcpack/rng.hpp"
#include "hcpack/types.hpp"

namespace hcpack {

enum class StreamMode {
  kFullShuffle,  // uniformly random permutation of all C(n,2) pairs
  kRejection,    // uniform pairs, repeats discarded
  kExplicit,     // caller-supplied order
};

std::string_view to_string(StreamMode mode);
StreamMode stream_mode_from_string(std::string_view s);

/// Lazily generated random graph process on K_n. Edges are produced on
/// demand and memoised, so indexing into an already produced prefix is free.
class EdgeStream {
 public:
  EdgeStream(Vertex n, std::uint64_t seed, StreamMode mode);

  static EdgeStream from_edges(Vertex n, std::vector<Edge> edges);

  Vertex n() const { return n_; }
  std::uint64_t seed() const { return seed_; }
  StreamMode mode() const { return mode_; }
  std::uint64_t total_pairs() const { return total_pairs_; }

  /// Produces the next edge, or nullopt once every pair has been emitted.
  std::optional<Edge> next();

  /// Edge number t (1-based), generating up to it if needed.
  const Edge& at(std::uint64_t t);

  /// Edges produced so far, in order.
  std::span<const Edge> produced() const { return edges_; }

  /// Rewinds the read cursor; produced edges are kept.
  void rewind() { cursor_ = 0; }

 private:
  EdgeStream() = default;
  Edge generate();
  Edge pair_from_index(std::uint64_t index) const;

  Vertex n_ = 0;
  std::uint64_t seed_ = 0;
  StreamMode mode_ = StreamMode::kExplicit;
  std::uint64_t total_pairs_ = 0;
  Rng rng_;
  std::vector<Edge> edges_;
  std::size_t cursor_ = 0;
  // Sparse Fisher-Yates: only displaced slots are stored.
  std::unordered_map<std::uint64_t, std::uint64_t> displaced_;
  std::unordered_set<std::uint64_t> seen_;
};

/// n >= 3 required.
EdgeStream new_stream(Vertex n, std::uint64_t seed, StreamMode mode);

/// Writes the "n=<n> seed=<seed>" header followed by "t u v" lines.
void dump_stream(std::ostream& out, Vertex n, std::uint64_t seed, std::span<const Edge> edges);

/// Incrementally maintained graph G_t with O(1) min-degree threshold test.
class ProcessState {
 public:
  ProcessState(Vertex n, int monitored_k);

  void apply_edge(const Edge& e);

  Vertex n() const { return static_cast<Vertex>(degree_.size()); }
  std::uint64_t t() const { return t_; }
  int monitored_k() const { return k_; }
  std::uint32_t degree(Vertex v) const { return degree_[v]; }
  std::span<const std::uint32_t> degrees() const { return degree_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  bool has_edge(const Edge& e) const { return present_.contains(e.key()); }
  std::uint64_t below_threshold_count() const { return below_; }
  bool threshold_reached() const { return below_ == 0; }
  std::uint32_t min_degree() const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::uint32_t> degree_;
  std::unordered_set<std::uint64_t> present_;
  std::uint64_t below_ = 0;
  std::uint64_t t_ = 0;
  int k_ = 1;
};

/// Smallest t with min degree of G_t >= k. Consumes the stream from its
/// current cursor; throws ExhaustedStream if the threshold is never reached.
std::uint64_t hitting_time(EdgeStream& stream, int k);

}  // namespace hcpack

#endif  // HCPACK_PROCESS_HPP
