#pragma once

#include "flagdepth/depth.hpp"

#include <string>
#include <vector>

namespace flagdepth {

struct ConvexPolytope {
  std::vector<Point> vertices;  // extreme points only, lexicographically sorted
  int ambient_dim = 0;
  int intrinsic_dim = -1;  // -1 when empty

  bool empty() const { return vertices.empty(); }
};

struct DepthRegion {
  Rat alpha;
  ConvexPolytope body;
};

enum class MedianClass { FullDimensional, Atom, NonAtomPoint, Segment, Other };

const char* median_class_name(MedianClass c);

struct MedianResult {
  Rat alpha_star;
  ConvexPolytope body;
  int dimension = -1;
  MedianClass classification = MedianClass::Other;
  std::vector<std::string> warnings;
  // Midpoint/outward probe verification of the candidate-vertex
  // hypothesis; false flags a configuration worth inspecting.
  bool verified = true;
};

// Maximum halfspace depth over the candidate set: atoms plus the
// intersection points of d atom-spanned hyperplanes. d <= 3.
Rat max_depth(const AtomicMeasure& m);

// Exact central region D_alpha in the plane as an intersection of closed
// halfplanes, refined with cutting planes until every vertex verifies
// depth >= alpha. alpha must be positive.
DepthRegion depth_region_2d(const AtomicMeasure& m, const Rat& alpha);

MedianResult median_2d(const AtomicMeasure& m);
MedianResult median_3d(const AtomicMeasure& m);

// Vertex representation of the central region D_alpha in R^3: the
// candidate arrangement vertices (atoms plus triple-plane intersections)
// reaching depth alpha. No facet enumeration.
ConvexPolytope depth_region_3d_vertices(const AtomicMeasure& m, const Rat& alpha);

bool region_contains(const DepthRegion& r, const Point& y);
bool polytope_contains(const ConvexPolytope& p, const Point& y);

// Exact feasibility of y in conv(points) via a phase-1 simplex.
bool in_convex_hull(const Point& y, const std::vector<Point>& points);

// Indices of the extreme points of the set.
std::vector<int> extreme_point_indices(const std::vector<Point>& points);

}  // namespace flagdepth
