#pragma once

#include <cstdint>
#include <random>

// Seeded draws used across the library. std::uniform_real_distribution and
// friends are implementation-defined, so the reductions here are spelled out
// to keep runs reproducible across standard libraries.
namespace nftk::rng {

/// splitmix64 finalizer; maps any 64-bit value to a well-mixed one.
constexpr std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Sub-seed derived from (seed, stream, index); used for per-particle draws.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream,
                                    std::uint64_t index) {
  return mix(mix(seed ^ 0x243f6a8885a308d3ULL) + mix(stream) * 0x100000001b3ULL + index);
}

using Engine = std::mt19937_64;

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Engine& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline double uniform_range(Engine& eng, double lo, double hi) {
  return lo + (hi - lo) * uniform01(eng);
}

/// Uniform index in [0, n) by rejection; n must be > 0.
inline std::uint64_t uniform_index(Engine& eng, std::uint64_t n) {
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % n;
  std::uint64_t v = eng();
  while (v >= limit) v = eng();
  return v % n;
}

} // namespace nftk::rng
