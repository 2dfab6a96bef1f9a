#include "flagdepth/rng.hpp"

#include <cmath>

namespace flagdepth {

std::pair<double, double> gaussian_pair(SplitMix64& rng) {
  double u1 = rng.u01();
  double u2 = rng.u01();
  double r = std::sqrt(-2.0 * std::log(u1));
  return {r * std::cos(2.0 * M_PI * u2), r * std::sin(2.0 * M_PI * u2)};
}

}  // namespace flagdepth
