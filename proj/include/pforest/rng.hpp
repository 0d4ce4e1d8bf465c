#pragma once

#include <cstdint>

namespace pforest {

/// Deterministic 64-bit generator (splitmix64). Every draw is a pure
/// function of the seed, so generated fixtures are identical across
/// platforms and runs.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Unbiased draw from [0, bound) by rejection; bound must be > 0.
  std::uint64_t next_below(std::uint64_t bound) {
    // Reject the low partial block so every residue is equally likely.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace pforest
