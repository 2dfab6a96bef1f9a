#include "flagdepth/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace flagdepth {

namespace {

// 2-D convex hull (monotone chain) in drawing order.
std::vector<Point> hull_2d(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(),
            [](const Point& a, const Point& b) { return lex_compare(a.c, b.c) < 0; });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  auto cross = [](const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  std::vector<Point> h;
  for (const Point& p : pts) {
    while (h.size() >= 2 && cross(h[h.size() - 2], h.back(), p) <= 0) h.pop_back();
    h.push_back(p);
  }
  size_t lower = h.size() + 1;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (h.size() >= lower && cross(h[h.size() - 2], h.back(), *it) <= 0) h.pop_back();
    h.push_back(*it);
  }
  h.pop_back();
  return h;
}

}  // namespace

std::string svg_scene_2d(const AtomicMeasure& m, const ConvexPolytope* body,
                         const std::string& title) {
  if (m.dim() != 2) throw DimensionMismatch("svg_scene_2d: d=2 required");
  double lo0 = 1e300, hi0 = -1e300, lo1 = 1e300, hi1 = -1e300;
  auto widen = [&](const Point& p) {
    lo0 = std::min(lo0, rat_double(p[0]));
    hi0 = std::max(hi0, rat_double(p[0]));
    lo1 = std::min(lo1, rat_double(p[1]));
    hi1 = std::max(hi1, rat_double(p[1]));
  };
  for (const Point& a : m.atoms()) widen(a);
  if (body)
    for (const Point& v : body->vertices) widen(v);
  double span = std::max({hi0 - lo0, hi1 - lo1, 1e-9});
  double pad = 0.08 * span;
  lo0 -= pad, lo1 -= pad;
  span += 2 * pad;
  const double size = 480.0;
  auto X = [&](const Point& p) { return (rat_double(p[0]) - lo0) / span * size; };
  auto Y = [&](const Point& p) { return size - (rat_double(p[1]) - lo1) / span * size; };

  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
    << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
  s << "<title>" << title << "</title>\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  std::vector<Point> hull = hull_2d(m.atoms());
  if (hull.size() >= 2) {
    s << "<polygon points=\"";
    for (const Point& p : hull) s << X(p) << "," << Y(p) << " ";
    s << "\" fill=\"none\" stroke=\"#888\" stroke-width=\"1.2\"/>\n";
  }
  if (body && !body->empty()) {
    const auto& v = body->vertices;
    if (body->intrinsic_dim >= 2) {
      std::vector<Point> bh = hull_2d(v);
      s << "<polygon points=\"";
      for (const Point& p : bh) s << X(p) << "," << Y(p) << " ";
      s << "\" fill=\"#7fbf7f\" fill-opacity=\"0.55\" stroke=\"#2a7f2a\" stroke-width=\"1.5\"/>\n";
    } else if (body->intrinsic_dim == 1) {
      s << "<line x1=\"" << X(v.front()) << "\" y1=\"" << Y(v.front()) << "\" x2=\""
        << X(v.back()) << "\" y2=\"" << Y(v.back())
        << "\" stroke=\"#2a7f2a\" stroke-width=\"3\"/>\n";
    } else {
      s << "<circle cx=\"" << X(v[0]) << "\" cy=\"" << Y(v[0])
        << "\" r=\"5\" fill=\"#2a7f2a\"/>\n";
    }
  }
  for (const Point& a : m.atoms())
    s << "<circle cx=\"" << X(a) << "\" cy=\"" << Y(a)
      << "\" r=\"3.2\" fill=\"#1f4e9e\" stroke=\"white\" stroke-width=\"0.8\"/>\n";
  s << "</svg>\n";
  return s.str();
}

}  // namespace flagdepth
