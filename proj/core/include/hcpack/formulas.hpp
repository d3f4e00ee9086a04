#ifndef HCPACK_FORMULAS_HPP
#define HCPACK_FORMULAS_HPP

// Closed-form thresholds of the random graph process and of COL.
// All logarithms are natural.

#include <cmath>
#include <cstdint>

namespace hcpack::formulas {

inline double pairs(std::uint64_t n) { return 0.5 * static_cast<double>(n) * static_cast<double>(n - 1); }

/// Default slowly diverging function: ln ln ln n.
inline double default_omega(std::uint64_t n) { return std::log(std::log(std::log(static_cast<double>(n)))); }

/// p = (ln n + (q-1) ln ln n - omega) / n.
inline double edge_probability(std::uint64_t n, int q, double omega) {
  const double ln = std::log(static_cast<double>(n));
  return (ln + (q - 1) * std::log(ln) - omega) / static_cast<double>(n);
}

/// m = C(n,2) p, the snapshot time of the structural lemmas.
inline double snapshot_time(std::uint64_t n, int q, double omega) {
  return pairs(n) * edge_probability(n, q, omega);
}

/// Upper end of the hitting-time window m + 2 omega n.
inline double window_upper(std::uint64_t n, int q, double omega) {
  return snapshot_time(n, q, omega) + 2.0 * omega * static_cast<double>(n);
}

/// n (ln n + (q-1) ln ln n) / 2, the normalisation used for tau.
inline double tau_reference(std::uint64_t n, int q) {
  const double ln = std::log(static_cast<double>(n));
  return 0.5 * static_cast<double>(n) * (ln + (q - 1) * std::log(ln));
}

/// t_eps = floor(eps n ln n).
inline std::uint64_t t_eps(std::uint64_t n, double eps) {
  return static_cast<std::uint64_t>(std::floor(eps * static_cast<double>(n) * std::log(static_cast<double>(n))));
}

/// Unclamped Full threshold eps ln n / (1000 q).
inline double full_threshold_raw(std::uint64_t n, int q, double eps) {
  return eps * std::log(static_cast<double>(n)) / (1000.0 * q);
}

/// d_full = max(1, floor(eps ln n / (1000 q))).
inline int d_full(std::uint64_t n, int q, double eps) {
  const double raw = std::floor(full_threshold_raw(n, q, eps));
  return raw < 1.0 ? 1 : static_cast<int>(raw);
}

/// floor(ln n / divisor); the default divisor is 100 q.
inline int small_threshold(std::uint64_t n, double divisor) {
  return static_cast<int>(std::floor(std::log(static_cast<double>(n)) / divisor));
}

/// nu_k = e^{2 omega} (ln n)^{k-q+1} / (k-1)!.
inline double nu(std::uint64_t n, int q, int k, double omega) {
  const double ln = std::log(static_cast<double>(n));
  return std::exp(2.0 * omega + (k - q + 1) * std::log(ln) - std::lgamma(static_cast<double>(k)));
}

/// m_+ = n ln n / (8 q).
inline double pool_floor(std::uint64_t n, int q) {
  return static_cast<double>(n) * std::log(static_cast<double>(n)) / (8.0 * q);
}

/// n - 203 q n / (eps ln n).
inline double full_prime_bound(std::uint64_t n, int q, double eps) {
  const double nd = static_cast<double>(n);
  return nd - 203.0 * q * nd / (eps * std::log(nd));
}

/// n - n^{exponent}; the exponent stands in for 1 - delta.
inline double full_bound(std::uint64_t n, double exponent) {
  const double nd = static_cast<double>(n);
  return nd - std::pow(nd, exponent);
}

inline double max_degree_bound(std::uint64_t n) { return 20.0 * std::log(static_cast<double>(n)); }

/// 1 / (10^6 q).
inline double expansion_alpha(int q) { return 1.0 / (1e6 * q); }

}  // namespace hcpack::formulas

#endif  // HCPACK_FORMULAS_HPP
