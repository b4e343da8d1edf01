#ifndef NILFORM_RNG_HPP
#define NILFORM_RNG_HPP

#include <cstdint>

namespace nilform {

/// Deterministic, platform-independent generator for seeded instance
/// construction and probe selection.
struct SplitMix64 {
  std::uint64_t state;
  explicit SplitMix64(std::uint64_t seed) : state(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// uniform in [lo, hi]
  long range(long lo, long hi) {
    return lo + long(next() % std::uint64_t(hi - lo + 1));
  }
};

} // namespace nilform

#endif
