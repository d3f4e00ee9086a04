#include "hcpack/hamilton_oracle.hpp"

#include <bit>
#include <cstdint>
#include <string>

namespace hcpack {

HamiltonOracleResult brute_force_hamilton(Vertex n, std::span<const Edge> edges) {
  if (n > kOracleMaxVertices) throw SizeLimit("oracle supports at most 20 vertices, got " + std::to_string(n));
  HamiltonOracleResult result;
  if (n < 3) return result;

  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : edges) {
    if (e.v >= n) throw InvalidParameter("edge endpoint out of range");
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }

  // ends[mask]: vertices v such that some path from 0 covers exactly `mask` and ends at v.
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  ends[1] = 1;
  for (std::uint32_t mask = 1; mask <= full; mask += 2) {
    for (std::uint32_t rest = ends[mask]; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      for (std::uint32_t next = adj[v] & ~mask; next != 0; next &= next - 1) {
        const int w = std::countr_zero(next);
        ends[mask | (1u << w)] |= 1u << w;
      }
    }
  }

  const std::uint32_t closing = ends[full] & adj[0];
  if (closing == 0) return result;

  // Walk back from a closing endpoint.
  std::vector<Vertex> cycle;
  std::uint32_t mask = full;
  int v = std::countr_zero(closing);
  while (v != 0) {
    cycle.push_back(static_cast<Vertex>(v));
    const std::uint32_t prev_mask = mask & ~(1u << v);
    const std::uint32_t preds = ends[prev_mask] & adj[v];
    mask = prev_mask;
    v = std::countr_zero(preds);
  }
  cycle.push_back(0);
  result.hamiltonian = true;
  result.cycle = std::move(cycle);
  return result;
}

}  // namespace hcpack
