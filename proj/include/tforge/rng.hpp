#ifndef TFORGE_RNG_HPP
#define TFORGE_RNG_HPP

#include <cstdint>

#include "tforge/integer.hpp"

namespace tforge {

// SplitMix64. Hand-rolled so that seeded test runs are reproducible across
// platforms and standard-library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0x9e3779b97f4a7c15ull) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform in [lo, hi] inclusive.
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Random prime in [3, bound].
  std::uint64_t prime_below(std::uint64_t bound) {
    for (;;) {
      std::uint64_t c = 3 + below(bound - 2);
      c |= 1;
      if (c <= bound && is_prime_u64(c)) return c;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace tforge

#endif
