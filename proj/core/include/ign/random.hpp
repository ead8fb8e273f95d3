#pragma once

#include <cstdint>
#include <random>

namespace ign {

using Rng = std::mt19937_64;

/// Generator for instance `index` of an experiment seeded with `base_seed`.
/// Seeding is `base_seed + index`, so a run is reproducible regardless of
/// how instances are distributed over threads.
inline Rng instance_rng(std::uint64_t base_seed, std::uint64_t index) {
  return Rng(base_seed + index);
}

/// Uniform on [0, 1) with 53 random bits; platform independent, unlike
/// std::uniform_real_distribution.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Uniform on (0, 1]: never returns an exact zero.
inline double uniform_open_closed(Rng& rng) { return 1.0 - uniform01(rng); }

inline double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

/// Uniform integer in [lo, hi].
inline std::uint64_t uniform_int(Rng& rng, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo + 1;
  if (span == 0) return rng();  // full 64-bit range
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return lo + r % span;
}

}  // namespace ign
