#ifndef HCPACK_HAMILTON_ORACLE_HPP
#define HCPACK_HAMILTON_ORACLE_HPP

#include <optional>
#include <span>
#include <vector>

#include "hcpack/types.hpp"

namespace hcpack {

inline constexpr Vertex kOracleMaxVertices = 20;

struct HamiltonOracleResult {
  bool hamiltonian = false;
  std::optional<std::vector<Vertex>> cycle;
};

/// Exact subset dynamic program over paths anchored at vertex 0.
/// Throws SizeLimit for n > 20.
HamiltonOracleResult brute_force_hamilton(Vertex n, std::span<const Edge> edges);

}  // namespace hcpack

#endif  // HCPACK_HAMILTON_ORACLE_HPP
