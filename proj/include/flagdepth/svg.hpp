#pragma once

#include "flagdepth/region.hpp"

#include <string>

namespace flagdepth {

// Static SVG of a planar dataset: atoms, their convex hull, and an
// optional region/median body (polygon, segment, or point).
std::string svg_scene_2d(const AtomicMeasure& m, const ConvexPolytope* body,
                         const std::string& title);

}  // namespace flagdepth
