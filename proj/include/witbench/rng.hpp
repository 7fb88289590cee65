#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace witbench {

// SplitMix64: tiny, fast, full-period seeded generator. Every stochastic
// component in the library derives its draws from this so that results are
// a pure function of the user-visible seed.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on the open interval (0, 1): never returns 0 or 1, so callers can
  // take logs and map onto open supports without clamping.
  double uniform_open() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller. Consumes two uniforms per draw; no cached
  // spare, so the stream position is a fixed function of the draw count.
  double normal() {
    const double u1 = uniform_open();
    const double u2 = uniform_open();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  // Derives an independent sub-stream seed for chunk/stream `stream`.
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 g(seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1)));
    g.next();
    return g.next();
  }
};

}  // namespace witbench
