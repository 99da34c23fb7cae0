#pragma once

#include <cstdint>

namespace gp {

// Deterministic 64-bit generator behind every sampler in the project
// (splitmix64). The update is fixed so streams reproduce bit for bit from the
// seed alone, on any platform:
//   state += 0x9E3779B97F4A7C15
//   z = state; z ^= z >> 30; z *= 0xBF58476D1CE4E5B9
//   z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31
// Doubles take the top 53 bits: (next() >> 11) * 2^-53.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // uniform in [0, 1)
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // uniform in [-1, 1)
  double next_symmetric() { return 2.0 * next_double() - 1.0; }

  // uniform in [lo, hi)
  double next_in(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // uniform integer in [0, n), n > 0
  std::uint64_t next_below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace gp
