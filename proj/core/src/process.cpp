#include "hcpack/process.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

namespace hcpack {

std::string_view to_string(StreamMode mode) {
  switch (mode) {
    case StreamMode::kFullShuffle:
      return "full-shuffle";
    case StreamMode::kRejection:
      return "rejection";
    case StreamMode::kExplicit:
      return "explicit";
  }
  return "unknown";
}

StreamMode stream_mode_from_string(std::string_view s) {
  if (s == "full-shuffle") return StreamMode::kFullShuffle;
  if (s == "rejection") return StreamMode::kRejection;
  if (s == "explicit") return StreamMode::kExplicit;
  throw InvalidParameter("unknown stream mode: " + std::string(s));
}

EdgeStream::EdgeStream(Vertex n, std::uint64_t seed, StreamMode mode)
    : n_(n), seed_(seed), mode_(mode), rng_(seed) {
  if (n < 3) throw InvalidParameter("stream needs n >= 3, got " + std::to_string(n));
  if (mode == StreamMode::kExplicit) throw InvalidParameter("explicit streams are built with from_edges");
  total_pairs_ = static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

EdgeStream EdgeStream::from_edges(Vertex n, std::vector<Edge> edges) {
  if (n < 3) throw InvalidParameter("stream needs n >= 3, got " + std::to_string(n));
  EdgeStream s;
  s.n_ = n;
  s.total_pairs_ = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::unordered_set<std::uint64_t> keys;
  for (const Edge& e : edges) {
    if (e.v >= n) throw InvalidParameter("edge endpoint out of range");
    if (!keys.insert(e.key()).second) throw DuplicateEdge("explicit stream repeats an edge");
  }
  s.edges_ = std::move(edges);
  return s;
}

Edge EdgeStream::pair_from_index(std::uint64_t index) const {
  const std::uint64_t n = n_;
  auto offset = [n](std::uint64_t u) { return u * (2 * n - u - 1) / 2; };
  const double b = 2.0 * static_cast<double>(n) - 1.0;
  const double disc = std::max(0.0, b * b - 8.0 * static_cast<double>(index));
  auto u = static_cast<std::uint64_t>(std::max(0.0, std::floor((b - std::sqrt(disc)) / 2.0)));
  if (u > n - 2) u = n - 2;
  while (u + 1 <= n - 2 && offset(u + 1) <= index) ++u;
  while (offset(u) > index) --u;
  const std::uint64_t v = index - offset(u) + u + 1;
  return Edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
}

Edge EdgeStream::generate() {
  const std::uint64_t i = edges_.size();
  if (mode_ == StreamMode::kFullShuffle) {
    const std::uint64_t j = i + rng_.below(total_pairs_ - i);
    auto slot = [this](std::uint64_t k) {
      auto it = displaced_.find(k);
      return it == displaced_.end() ? k : it->second;
    };
    const std::uint64_t picked = slot(j);
    if (j != i) displaced_[j] = slot(i);
    displaced_.erase(i);
    return pair_from_index(picked);
  }
  for (;;) {
    const auto a = static_cast<Vertex>(rng_.below(n_));
    const auto b = static_cast<Vertex>(rng_.below(n_));
    if (a == b) continue;
    Edge e(a, b);
    if (seen_.insert(e.key()).second) return e;
  }
}

std::optional<Edge> EdgeStream::next() {
  if (cursor_ < edges_.size()) return edges_[cursor_++];
  if (mode_ == StreamMode::kExplicit || edges_.size() >= total_pairs_) return std::nullopt;
  edges_.push_back(generate());
  return edges_[cursor_++];
}

const Edge& EdgeStream::at(std::uint64_t t) {
  if (t == 0 || t > total_pairs_) throw std::out_of_range("edge index out of range");
  while (edges_.size() < t) {
    if (mode_ == StreamMode::kExplicit) throw ExhaustedStream("explicit stream shorter than requested index");
    edges_.push_back(generate());
  }
  return edges_[t - 1];
}

EdgeStream new_stream(Vertex n, std::uint64_t seed, StreamMode mode) { return EdgeStream(n, seed, mode); }

void dump_stream(std::ostream& out, Vertex n, std::uint64_t seed, std::span<const Edge> edges) {
  out << "n=" << n << " seed=" << seed << '\n';
  std::uint64_t t = 0;
  for (const Edge& e : edges) out << ++t << ' ' << e.u << ' ' << e.v << '\n';
}

ProcessState::ProcessState(Vertex n, int monitored_k)
    : adjacency_(n), degree_(n, 0), below_(monitored_k > 0 ? n : 0), k_(monitored_k) {
  if (monitored_k < 1) throw InvalidParameter("monitored degree threshold must be >= 1");
}

void ProcessState::apply_edge(const Edge& e) {
  if (e.v >= n()) throw InvalidParameter("edge endpoint out of range");
  if (!present_.insert(e.key()).second) {
    throw DuplicateEdge("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} already present");
  }
  for (Vertex x : {e.u, e.v}) {
    adjacency_[x].push_back(e.other(x));
    if (++degree_[x] == static_cast<std::uint32_t>(k_)) --below_;
  }
  ++t_;
}

std::uint32_t ProcessState::min_degree() const {
  return degree_.empty() ? 0 : *std::min_element(degree_.begin(), degree_.end());
}

std::uint64_t hitting_time(EdgeStream& stream, int k) {
  if (k < 1) throw InvalidParameter("hitting time threshold must be >= 1");
  ProcessState state(stream.n(), k);
  while (!state.threshold_reached()) {
    auto e = stream.next();
    if (!e) throw ExhaustedStream("stream exhausted before min degree " + std::to_string(k));
    state.apply_edge(*e);
  }
  return state.t();
}

}  // namespace hcpack
