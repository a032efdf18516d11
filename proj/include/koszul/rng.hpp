#pragma once

#include <cstdint>

namespace koszul {

// splitmix64: the mandated generator, so every implementation of the harness
// produces identical corpora from identical seeds. Bounded draws are
// next() % k throughout; that mapping is part of the documented sequence.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t below(std::uint64_t k) { return next() % k; }
  // uniform-ish in [lo, hi] inclusive
  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
};

}  // namespace koszul
