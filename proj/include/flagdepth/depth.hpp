#pragma once

#include "flagdepth/measure.hpp"

#include <cstdint>
#include <vector>

namespace flagdepth {

// One level of the recursive decomposition: the boundary hyperplane that
// was chosen and the side whose open mass entered the sum.
struct TraceStep {
  Hyperplane plane;
  int side = +1;  // +1: open side of the stored normal, -1: the other
  Rat open_mass;
};

struct DepthResult {
  MassValue value;
  FlagHalfspace witness;
  std::vector<TraceStep> trace;
  // Whether some closed halfspace attains the depth. Always true for
  // atomic measures; mixtures may only attain it in the flag sense.
  bool attained = true;
};

// d = 1 base case: weight at x plus the lighter open halfline.
DepthResult depth_1d(const AtomicMeasure& m, const Point& x);

// Exhaustive angular sweep in the plane: evaluates every critical
// direction (normals of atom-through-x lines) and a representative
// between each consecutive pair. Independent of exact_depth; serves as
// its oracle in d = 2.
DepthResult depth_sweep_2d(const AtomicMeasure& m, const Point& x);

// Exact halfspace depth in any dimension by recursive boundary
// decomposition: depth = min over candidate hyperplanes P through x of
// open-side mass plus the depth of the measure restricted to P.
DepthResult exact_depth(const AtomicMeasure& m, const Point& x);

FlagHalfspace minimizing_flag(const AtomicMeasure& m, const Point& x);

// Minimum closed-halfspace mass over pseudo-random directions; an upper
// bound for the depth, never below it.
MassValue sampled_depth_upper_bound(const AtomicMeasure& m, const Point& x, int n_dirs,
                                    std::uint64_t seed);
MassValue sampled_depth_upper_bound(const DiskMixtureMeasure& m, const Point& x, int n_dirs,
                                    std::uint64_t seed);

// Depth of the planar disk-plus-atoms mixture, minimised over flag
// halfspaces: critical angles where an atom meets the boundary line are
// evaluated as flags (all four choices), and the smooth disk mass is
// minimised inside each angular cell. `attained` reports whether some
// closed halfspace also reaches the infimum.
DepthResult mixture_depth_2d(const DiskMixtureMeasure& m, const Point& x);

}  // namespace flagdepth
