#ifndef HCPACK_TYPES_HPP
#define HCPACK_TYPES_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace hcpack {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {
    if (a == b) throw std::invalid_argument("edge endpoints must differ");
  }

  Vertex other(Vertex x) const { return x == u ? v : u; }
  std::uint64_t key() const { return (static_cast<std::uint64_t>(u) << 32) | v; }

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DuplicateEdge : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ExhaustedStream : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class InvalidRotation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SizeLimit : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace hcpack

template <>
struct std::hash<hcpack::Edge> {
  std::size_t operator()(const hcpack::Edge& e) const noexcept {
    return std::hash<std::uint64_t>{}(e.key());
  }
};

#endif  // HCPACK_TYPES_HPP
