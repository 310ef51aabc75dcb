#pragma once

#include <cstdint>
#include <random>

namespace sniff {

/// splitmix64 mixing step; used to derive independent seed streams.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic RNG. mt19937_64 output is pinned by the standard, and the
/// integer/unit-interval draws below avoid the implementation-defined
/// std::uniform_* distributions, so identical seeds give identical streams
/// on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound); bound must be >= 1. Unbiased via rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
  }

  /// Uniform double in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Independent stream for (seed, a, b), e.g. one per baseline run.
  static Rng derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
    return Rng(mix64(mix64(mix64(seed) ^ a) ^ b));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sniff
