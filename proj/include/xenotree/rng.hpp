#pragma once

#include <cstdint>

namespace xt {

// splitmix64. Self-contained so that seeded runs reproduce across standard
// libraries (std::uniform_int_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound >= 1. Rejection-free enough for test use.
  uint64_t below(uint64_t bound) {
    // Debiased multiply-shift (Lemire).
    uint64_t x = next();
    __uint128_t m = (__uint128_t)x * bound;
    uint64_t lo = (uint64_t)m;
    if (lo < bound) {
      uint64_t t = (0 - bound) % bound;
      while (lo < t) {
        x = next();
        m = (__uint128_t)x * bound;
        lo = (uint64_t)m;
      }
    }
    return (uint64_t)(m >> 64);
  }

  int range(int lo, int hi) {  // inclusive bounds
    return lo + int(below(uint64_t(hi - lo + 1)));
  }

  double unit() { return double(next() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

}  // namespace xt
