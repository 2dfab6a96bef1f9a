#pragma once

// Shared generators for the depth test suites: small random rational
// configurations with deliberately degenerate features mixed in
// (collinear triples, query on an atom, atoms equal to the query).

#include "flagdepth/measure.hpp"
#include "flagdepth/rng.hpp"

#include <vector>

namespace flagdepth::testsupport {

inline Rat small_rat(SplitMix64& rng, int span = 40, int max_den = 8) {
  long num = static_cast<long>(rng.next() % (2 * span + 1)) - span;
  long den = 1 + static_cast<long>(rng.next() % max_den);
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Point rand_point(SplitMix64& rng, int d) {
  Coords c(d);
  for (int k = 0; k < d; ++k) c[k] = small_rat(rng);
  return Point(std::move(c));
}

struct DepthCase {
  AtomicMeasure measure;
  Point query;
};

// Random planar configuration, n in [1, max_n]; every third case plants
// a collinear triple and every fourth queries at an atom.
inline DepthCase random_case_2d(SplitMix64& rng, int index, int max_n = 12) {
  const int n = 1 + static_cast<int>(rng.next() % static_cast<std::uint64_t>(max_n));
  std::vector<Point> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) pts.push_back(rand_point(rng, 2));
  if (index % 3 == 0 && n >= 3) {
    // replace the last point by one collinear with the first two
    Coords c(2);
    Rat t = small_rat(rng, 3, 4);
    for (int k = 0; k < 2; ++k) c[k] = pts[0][k] + t * (pts[1][k] - pts[0][k]);
    pts[n - 1] = Point(std::move(c));
  }
  Point query = (index % 4 == 0) ? pts[static_cast<size_t>(rng.next()) % pts.size()]
                                 : rand_point(rng, 2);
  if (index % 5 == 0) pts.push_back(query);  // atom exactly at the query
  return {AtomicMeasure::empirical(pts), query};
}

}  // namespace flagdepth::testsupport
