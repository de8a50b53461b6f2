#pragma once

#include <cstdint>

namespace congest {

/// Counter-based generator built on the SplitMix64 mixing function:
/// value(i) = mix(seed + (i+1) * 0x9E3779B97F4A7C15). Stateless, so any
/// sample index can be drawn independently and batches reduce in a fixed
/// order regardless of parallelism.
struct CounterRng {
  std::uint64_t seed = 0;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t bits(std::uint64_t counter) const {
    return mix(seed + (counter + 1) * 0x9E3779B97F4A7C15ULL);
  }

  /// Uniform double in [0, 1).
  double uniform(std::uint64_t counter) const {
    return static_cast<double>(bits(counter) >> 11) * 0x1.0p-53;
  }

  /// Uniform integer in [0, bound) by 128-bit multiply-shift.
  std::uint64_t below(std::uint64_t counter, std::uint64_t bound) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(bits(counter)) * bound) >> 64);
  }
};

}  // namespace congest
