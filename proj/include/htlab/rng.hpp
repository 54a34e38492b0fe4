#pragma once

#include <cstdint>

#include "htlab/matrix.hpp"

namespace htlab {

/// SplitMix64: fixed, platform-independent 64-bit mixing generator. Every
/// seeded sample in the library goes through this so reports are reproducible
/// bit for bit.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection, exactly unbiased.
  uint64_t next_below(uint64_t bound) {
    uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

  /// Uniform integer in [-b, b].
  long long next_bounded(long long b) {
    return static_cast<long long>(next_below(static_cast<uint64_t>(2 * b + 1))) - b;
  }

  /// Vector with entries uniform in {-b..b}.
  Vec next_vec(size_t len, long long b) {
    Vec v(len);
    for (auto& x : v) x = Rat(next_bounded(b));
    return v;
  }

  /// Nonzero vector with entries uniform in {-b..b} (resamples zero vectors).
  Vec next_nonzero_vec(size_t len, long long b) {
    for (;;) {
      Vec v = next_vec(len, b);
      if (!is_zero(v)) return v;
    }
  }

  static uint64_t mix(uint64_t seed, uint64_t index) {
    SplitMix64 g(seed ^ (0x632be59bd9b4e019ull + index * 0x9e3779b97f4a7c15ull));
    return g.next();
  }

 private:
  uint64_t state_;
};

}  // namespace htlab
