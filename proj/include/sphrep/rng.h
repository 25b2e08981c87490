#pragma once

#include <cstdint>

#include "sphrep/rotations.h"

// Counter-based deterministic RNG: stream k of seed s is independent of how
// many draws other streams made, so sample k is reproducible in isolation.

namespace sphrep {

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

class SampleRng {
 public:
  SampleRng(uint64_t seed, uint64_t index) : state_(seed) {
    state_ ^= 0x9E3779B97F4A7C15ull * (index + 1);
    splitmix64(state_);  // decorrelate nearby (seed, index) pairs
  }

  uint64_t next_u64() { return splitmix64(state_); }

  // uniform in [0, 1)
  double next_double() { return (next_u64() >> 11) * 0x1.0p-53; }

  // uniform in [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  Vec3 unit_vector() {
    // Marsaglia: uniform on the sphere.
    for (;;) {
      double a = uniform(-1, 1), b = uniform(-1, 1);
      double s = a * a + b * b;
      if (s >= 1 || s < 1e-12) continue;
      double r = 2 * std::sqrt(1 - s);
      return {a * r, b * r, 1 - 2 * s};
    }
  }

 private:
  uint64_t state_;
};

}  // namespace sphrep
