// sampling.hpp
// Deterministic seeded sampling. splitmix64 is used instead of std::mt19937
// so streams are reproducible across standard libraries and platforms.
#pragma once

#include <cstdint>

#include "vogan/numeric.hpp"

namespace vogan {

struct SplitMix64 {
  uint64_t state;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  // Uniform in [-50, 50]: coefficients drawn mod a small prime and lifted.
  long coefficient() { return long(next() % 101u) - 50; }
};

}  // namespace vogan
