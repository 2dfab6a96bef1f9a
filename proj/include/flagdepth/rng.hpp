#pragma once

#include <cstdint>
#include <utility>

namespace flagdepth {

// Counter-based 64-bit generator (splitmix64). Deterministic across
// platforms; every consumer in this library seeds its own stream.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform in the open interval (0, 1).
  double u01() { return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53; }

  // Signed 32-bit value; rejects zero when nonzero is required elsewhere.
  std::int32_t i32() { return static_cast<std::int32_t>(next() >> 32); }
};

// One Box-Muller pair of standard Gaussian variates.
std::pair<double, double> gaussian_pair(SplitMix64& rng);

}  // namespace flagdepth
