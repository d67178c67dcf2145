#ifndef BOSFLP_RNG_HPP
#define BOSFLP_RNG_HPP

#include <cmath>
#include <cstdint>

namespace bosflp {

// splitmix64 stream. The exact finalizer is part of the file-format contract:
// generated instances and scenario sets must be reproducible from (seed, params)
// alone, in any implementation.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [lo, hi], inclusive. Requires lo <= hi.
  int64_t next_int(int64_t lo, int64_t hi) {
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int64_t>(next_u64() % span);
  }

  // Standard normal via Box-Muller. Consumes two uniforms per call;
  // bit-exactness across platforms is not a goal, per-platform determinism is.
  double next_normal() {
    double u1 = next_uniform();
    double u2 = next_uniform();
    while (u1 <= 0.0) u1 = next_uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

 private:
  uint64_t state_;
};

// Deterministic seed derivation for sub-streams (per-run scenario seeds etc).
inline uint64_t mix_seed(uint64_t base, uint64_t a, uint64_t b = 0) {
  SplitMix64 g(base ^ (a * 0x9E3779B97F4A7C15ULL) ^ (b * 0xC2B2AE3D27D4EB4FULL));
  return g.next_u64();
}

}  // namespace bosflp

#endif
