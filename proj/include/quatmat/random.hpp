#pragma once

#include <cstddef>
#include <cstdint>

#include "quatmat/errors.hpp"
#include "quatmat/matrix.hpp"

namespace quatmat {

// Deterministic counter-based generation built on the SplitMix64 finalizer.
// The value at counter position i of the stream keyed by `seed` is
// mix(seed + (i+1)*gamma), so any entry is addressable without advancing
// state, and distinct (seed, n, trial, plane) tuples get disjoint streams.
// Identical inputs reproduce bit-identical matrices on every platform.

inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ull;

inline std::uint64_t splitmix64_mix(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ull;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBull;
  z ^= z >> 31;
  return z;
}

/// Stream `seed`, counter position i.
inline std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t i) {
  return splitmix64_mix(seed + (i + 1) * kSplitMixGamma);
}

/// Maps 64 random bits to the open interval (0,1): (bits53 + 0.5) * 2^-53.
inline double bits_to_open_unit(std::uint64_t bits) {
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

/// Strictly inside (-1, 1); both endpoints are unreachable.
inline double bits_to_open_symmetric(std::uint64_t bits) {
  return 2.0 * bits_to_open_unit(bits) - 1.0;
}

/// Per-trial seed for a benchmark sweep: two chained stream derivations of
/// the base seed by (n, trial).
inline std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t n, int trial) {
  return splitmix64_at(splitmix64_at(base_seed, n),
                       static_cast<std::uint64_t>(trial));
}

/// n x n quaternion matrix with all four planes filled i.i.d. uniform on
/// (-1, 1). Plane p (0..3 for a..d) draws from the derived stream
/// splitmix64_at(seed, p), entries indexed row-major.
inline QuatMatrix random_quat_matrix(std::size_t n, std::uint64_t seed) {
  if (n < 1) throw UsageError("random_quat_matrix: n must be >= 1");
  QuatMatrix z(n, n);
  RealMatrix* planes[4] = {&z.a, &z.b, &z.c, &z.d};
  for (std::uint64_t p = 0; p < 4; ++p) {
    const std::uint64_t plane_seed = splitmix64_at(seed, p);
    std::vector<double>& data = planes[p]->data();
    for (std::size_t t = 0; t < data.size(); ++t) {
      data[t] = bits_to_open_symmetric(splitmix64_at(plane_seed, t));
    }
  }
  return z;
}

}  // namespace quatmat
