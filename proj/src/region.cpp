#include "flagdepth/region.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

namespace flagdepth {

const char* median_class_name(MedianClass c) {
  switch (c) {
    case MedianClass::FullDimensional: return "FullDimensional";
    case MedianClass::Atom: return "Atom";
    case MedianClass::NonAtomPoint: return "NonAtomPoint";
    case MedianClass::Segment: return "Segment";
    case MedianClass::Other: return "Other";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Exact phase-1 simplex: feasibility of A x = b, x >= 0.
// ---------------------------------------------------------------------------

namespace {

bool lp_feasible(std::vector<Coords> A, Coords b) {
  const size_t m = A.size();
  const size_t n = m == 0 ? 0 : A[0].size();
  for (size_t i = 0; i < m; ++i)
    if (b[i] < 0) {
      for (Rat& v : A[i]) v = -v;
      b[i] = -b[i];
    }
  // tableau with artificial identity block; minimise the artificial sum
  const size_t cols = n + m;
  std::vector<Coords> T(m, Coords(cols, Rat(0)));
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1;
  }
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) basis[i] = n + i;
  // reduced-cost row for min sum(artificials): r_j = c_j - colsum_j
  Coords red(cols, Rat(0));
  Rat obj = 0;
  for (size_t j = 0; j < cols; ++j) {
    Rat s = 0;
    for (size_t i = 0; i < m; ++i) s += T[i][j];
    red[j] = (j < n ? Rat(0) : Rat(1)) - s;
  }
  for (size_t i = 0; i < m; ++i) obj += b[i];

  for (;;) {
    // Bland: first column with negative reduced cost
    size_t enter = cols;
    for (size_t j = 0; j < cols; ++j)
      if (red[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    size_t leave = m;
    Rat best_ratio;
    for (size_t i = 0; i < m; ++i) {
      if (T[i][enter] <= 0) continue;
      Rat ratio = b[i] / T[i][enter];
      if (leave == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) break;  // unbounded: cannot happen with artificial basis
    // pivot
    Rat piv = T[leave][enter];
    for (Rat& v : T[leave]) v /= piv;
    b[leave] /= piv;
    for (size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter] == 0) continue;
      Rat f = T[i][enter];
      for (size_t j = 0; j < cols; ++j) T[i][j] -= f * T[leave][j];
      b[i] -= f * b[leave];
    }
    Rat fr = red[enter];
    if (fr != 0) {
      for (size_t j = 0; j < cols; ++j) red[j] -= fr * T[leave][j];
      obj -= fr * b[leave];
    }
    basis[leave] = enter;
  }
  return obj == 0;
}

}  // namespace

bool in_convex_hull(const Point& y, const std::vector<Point>& points) {
  if (points.empty()) return false;
  const int d = y.dim();
  std::vector<Coords> A(d + 1, Coords(points.size(), Rat(0)));
  for (size_t j = 0; j < points.size(); ++j) {
    if (points[j].dim() != d) throw DimensionMismatch("in_convex_hull");
    for (int i = 0; i < d; ++i) A[i][j] = points[j][i];
    A[d][j] = 1;
  }
  Coords b(y.c);
  b.push_back(Rat(1));
  return lp_feasible(std::move(A), std::move(b));
}

std::vector<int> extreme_point_indices(const std::vector<Point>& points) {
  std::vector<int> out;
  for (size_t i = 0; i < points.size(); ++i) {
    std::vector<Point> others;
    others.reserve(points.size() - 1);
    for (size_t j = 0; j < points.size(); ++j)
      if (j != i) others.push_back(points[j]);
    if (others.empty() || !in_convex_hull(points[i], others)) out.push_back(static_cast<int>(i));
  }
  return out;
}

bool polytope_contains(const ConvexPolytope& p, const Point& y) {
  if (p.empty()) return false;
  if (y.dim() != p.ambient_dim) throw DimensionMismatch("polytope_contains");
  return in_convex_hull(y, p.vertices);
}

bool region_contains(const DepthRegion& r, const Point& y) { return polytope_contains(r.body, y); }

// ---------------------------------------------------------------------------
// Shared polytope helpers.
// ---------------------------------------------------------------------------

namespace {

ConvexPolytope make_polytope(std::vector<Point> pts, int ambient) {
  ConvexPolytope p;
  p.ambient_dim = ambient;
  if (pts.empty()) return p;
  std::sort(pts.begin(), pts.end(),
            [](const Point& a, const Point& b) { return lex_compare(a.c, b.c) < 0; });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Point> extremes;
  for (int i : extreme_point_indices(pts)) extremes.push_back(pts[i]);
  p.intrinsic_dim = affine_dimension(extremes);
  p.vertices = std::move(extremes);
  return p;
}

// depth via the minimum closed-halfplane mass; also reports a direction
// attaining it (used as a cutting plane in the region refinement).
std::pair<Rat, Coords> min_closed_2d(const AtomicMeasure& m, const Point& x) {
  Rat at_x = 0;
  std::vector<Coords> diffs;
  std::vector<Rat> wts;
  for (size_t i = 0; i < m.size(); ++i) {
    Coords diff = sub(m.atom(i), x);
    if (is_zero(diff))
      at_x += m.weight(i);
    else {
      diffs.push_back(std::move(diff));
      wts.push_back(m.weight(i));
    }
  }
  if (diffs.empty()) return {at_x, Coords{Rat(1), Rat(0)}};

  auto closed_mass = [&](const Coords& u) {
    Rat s = at_x;
    for (size_t i = 0; i < diffs.size(); ++i)
      if (dot(diffs[i], u) >= 0) s += wts[i];
    return s;
  };

  std::set<Coords> dir_set;
  for (const Coords& diff : diffs) {
    Coords p = primitive(Coords{-diff[1], diff[0]});
    dir_set.insert(p);
    Coords n(p);
    for (Rat& v : n) v = -v;
    dir_set.insert(std::move(n));
  }
  std::vector<Coords> dirs(dir_set.begin(), dir_set.end());
  auto angle_less = [](const Coords& a, const Coords& b) {
    auto half = [](const Coords& u) { return (u[1] > 0 || (u[1] == 0 && u[0] > 0)) ? 0 : 1; };
    if (half(a) != half(b)) return half(a) < half(b);
    return a[0] * b[1] - a[1] * b[0] > 0;
  };
  std::sort(dirs.begin(), dirs.end(), angle_less);

  Rat best;
  Coords best_dir;
  bool have = false;
  auto consider = [&](const Coords& u) {
    Rat v = closed_mass(u);
    if (!have || v < best) {
      best = v;
      best_dir = u;
      have = true;
    }
  };
  for (size_t i = 0; i < dirs.size(); ++i) {
    consider(dirs[i]);
    const Coords& a = dirs[i];
    const Coords& b = dirs[(i + 1) % dirs.size()];
    Coords rep = add_scaled(a, Rat(1), b);
    if (is_zero(rep)) rep = Coords{-a[1], a[0]};
    consider(primitive(rep));
  }
  return {best, best_dir};
}

}  // namespace

// ---------------------------------------------------------------------------
// 2-D central regions.
// ---------------------------------------------------------------------------

namespace {

// Largest offset whose closed upper halfplane {<y,u> >= t} still carries
// mass >= alpha; nullopt when even the whole space falls short.
std::optional<Rat> upper_offset(const AtomicMeasure& m, const Coords& u, const Rat& alpha) {
  std::vector<std::pair<Rat, Rat>> proj;  // (projection, weight)
  proj.reserve(m.size());
  for (size_t i = 0; i < m.size(); ++i) proj.emplace_back(dot(m.atom(i).c, u), m.weight(i));
  std::sort(proj.begin(), proj.end(),
            [](const auto& a, const auto& b) { return a.first > b.first; });
  Rat acc = 0;
  for (size_t i = 0; i < proj.size(); ++i) {
    acc += proj[i].second;
    // fold ties: mass at >= proj[i] includes equal projections
    if (i + 1 < proj.size() && proj[i + 1].first == proj[i].first) continue;
    if (acc >= alpha) return proj[i].first;
  }
  return std::nullopt;
}

// Sutherland-Hodgman clip of a (possibly degenerate) polygon by the
// halfplane {<y,u> <= t}; exact.
std::vector<Point> clip(const std::vector<Point>& poly, const Coords& u, const Rat& t) {
  std::vector<Point> out;
  const size_t n = poly.size();
  for (size_t i = 0; i < n; ++i) {
    const Point& s = poly[i];
    const Point& e = poly[(i + 1) % n];
    Rat ds = dot(s.c, u) - t;
    Rat de = dot(e.c, u) - t;
    bool sin = ds <= 0, ein = de <= 0;
    if (sin) out.push_back(s);
    if (sin != ein) {
      Rat f = ds / (ds - de);
      Coords p(2);
      for (int k = 0; k < 2; ++k) p[k] = s[k] + f * (e[k] - s[k]);
      out.emplace_back(std::move(p));
    }
  }
  return out;
}

}  // namespace

DepthRegion depth_region_2d(const AtomicMeasure& m, const Rat& alpha) {
  if (m.dim() != 2) throw DimensionMismatch("depth_region_2d: d=2 required");
  if (alpha <= 0) throw std::invalid_argument("depth_region_2d: alpha must be positive");
  DepthRegion out{alpha, {}};
  out.body.ambient_dim = 2;
  if (m.size() == 0 || alpha > m.total_mass()) return out;
  if (m.size() == 1) {
    if (alpha <= m.weight(0)) out.body = make_polytope({m.atom(0)}, 2);
    return out;
  }

  // candidate cut directions: pair-line normals plus pair differences
  // (the latter pin degenerate, lower-dimensional regions)
  std::set<Coords> dirs;
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j) {
      Coords diff = sub(m.atom(j), m.atom(i));
      for (const Coords& base : {diff, Coords{-diff[1], diff[0]}}) {
        Coords p = primitive(base);
        dirs.insert(p);
        Coords neg(p);
        for (Rat& v : neg) v = -v;
        dirs.insert(std::move(neg));
      }
    }

  // start from a box around the support
  Rat lo0 = m.atom(0)[0], hi0 = lo0, lo1 = m.atom(0)[1], hi1 = lo1;
  for (size_t i = 1; i < m.size(); ++i) {
    lo0 = std::min(lo0, m.atom(i)[0]);
    hi0 = std::max(hi0, m.atom(i)[0]);
    lo1 = std::min(lo1, m.atom(i)[1]);
    hi1 = std::max(hi1, m.atom(i)[1]);
  }
  lo0 -= 1, lo1 -= 1, hi0 += 1, hi1 += 1;
  std::vector<Point> poly{Point{lo0, lo1}, Point{hi0, lo1}, Point{hi0, hi1}, Point{lo0, hi1}};

  auto apply = [&](const Coords& u) {
    if (poly.empty()) return;
    // depth >= alpha forces <x,u> <= T for the largest valid offset T
    auto t = upper_offset(m, u, alpha);
    poly = t ? clip(poly, u, *t) : std::vector<Point>{};
  };
  for (const Coords& u : dirs) apply(u);

  // cutting-plane refinement: every surviving vertex must reach depth
  // alpha; a failing vertex yields a direction that cuts it off, so on
  // termination conv(vertices) == D_alpha exactly.
  for (int round = 0; round < 64 && !poly.empty(); ++round) {
    ConvexPolytope hull = make_polytope(poly, 2);
    bool all_ok = true;
    for (const Point& v : hull.vertices) {
      auto [depth, dir] = min_closed_2d(m, v);
      if (depth < alpha) {
        apply(dir);
        all_ok = false;
      }
    }
    if (all_ok) {
      out.body = std::move(hull);
      return out;
    }
  }
  if (poly.empty()) return out;
  throw std::logic_error("depth_region_2d: refinement did not converge");
}

// ---------------------------------------------------------------------------
// Maximum depth and medians.
// ---------------------------------------------------------------------------

namespace {

struct CandidateScan {
  Rat alpha_star;
  std::vector<Point> argmax;  // candidate points attaining alpha_star
};

CandidateScan scan_candidates_2d(const AtomicMeasure& m) {
  CandidateScan out;
  bool have = false;
  auto consider = [&](const Point& p) {
    Rat v = min_closed_2d(m, p).first;
    if (!have || v > out.alpha_star) {
      out.alpha_star = v;
      out.argmax.clear();
      have = true;
    }
    if (v == out.alpha_star) out.argmax.push_back(p);
  };
  for (const Point& a : m.atoms()) consider(a);

  // atom-pair lines, deduped, then all pairwise intersections
  struct Line {
    Coords n;
    Rat off;
  };
  std::map<std::pair<Coords, Rat>, Line> lines;
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j) {
      Coords diff = sub(m.atom(j), m.atom(i));
      Coords n = primitive_unsigned(Coords{-diff[1], diff[0]});
      Rat off = dot(m.atom(i).c, n);
      lines.emplace(std::make_pair(n, off), Line{n, off});
    }
  std::vector<Line> ls;
  for (auto& [k, l] : lines) ls.push_back(l);
  std::set<Coords> seen;
  for (size_t i = 0; i < ls.size(); ++i)
    for (size_t j = i + 1; j < ls.size(); ++j) {
      auto sol = solve_square({ls[i].n, ls[j].n}, {ls[i].off, ls[j].off});
      if (!sol) continue;
      if (seen.insert(*sol).second) consider(Point(*sol));
    }
  return out;
}

// 3-D candidate scan over triple-plane intersection vertices, on
// integer-scaled coordinates with a sampled-direction upper bound used to
// prune candidates that cannot reach the threshold. Without `level` the
// threshold is the running maximum and argmax points are kept; with it,
// every candidate of depth >= *level is kept.
CandidateScan scan_candidates_3d(const AtomicMeasure& m, const Rat* level = nullptr) {
  const size_t n = m.size();

  // scale all coordinates to integers
  Int den = 1;
  for (size_t i = 0; i < n; ++i)
    for (const Rat& c : m.atom(i).c)
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<std::array<Int, 3>> P(n);
  for (size_t i = 0; i < n; ++i)
    for (int k = 0; k < 3; ++k) P[i][k] = m.atom(i)[k].get_num() * (den / m.atom(i)[k].get_den());

  std::vector<Point> scaled_atoms(n);
  std::vector<Rat> weights(n);
  for (size_t i = 0; i < n; ++i) {
    scaled_atoms[i] = Point{Rat(P[i][0]), Rat(P[i][1]), Rat(P[i][2])};
    weights[i] = m.weight(i);
  }
  AtomicMeasure scaled(scaled_atoms, weights);

  CandidateScan out;
  bool have = false;
  std::vector<Point> kept_scaled;
  auto consider = [&](const Point& p) {
    Rat v = *exact_depth(scaled, p).value.exact;
    if (!have || v > out.alpha_star) {
      out.alpha_star = v;
      if (!level) kept_scaled.clear();
      have = true;
    }
    if (level ? v >= *level : v == out.alpha_star) kept_scaled.push_back(p);
    return v;
  };
  for (const Point& a : scaled_atoms) consider(a);
  auto prune_threshold = [&]() -> const Rat& { return level ? *level : out.alpha_star; };

  // atom-spanned planes, deduped by canonical (normal, offset)
  struct Plane {
    std::array<Int, 3> nv;
    Int off;
  };
  auto cross = [](const std::array<Int, 3>& a, const std::array<Int, 3>& b) {
    return std::array<Int, 3>{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                              a[0] * b[1] - a[1] * b[0]};
  };
  std::map<std::vector<Int>, Plane> plane_map;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      for (size_t k = j + 1; k < n; ++k) {
        std::array<Int, 3> d1{P[j][0] - P[i][0], P[j][1] - P[i][1], P[j][2] - P[i][2]};
        std::array<Int, 3> d2{P[k][0] - P[i][0], P[k][1] - P[i][1], P[k][2] - P[i][2]};
        std::array<Int, 3> nv = cross(d1, d2);
        if (nv[0] == 0 && nv[1] == 0 && nv[2] == 0) continue;
        Int off = nv[0] * P[i][0] + nv[1] * P[i][1] + nv[2] * P[i][2];
        Int g = 0;
        for (const Int& v : nv) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), off.get_mpz_t());
        int sign = 0;
        for (const Int& v : nv)
          if (v != 0) {
            sign = sgn(v);
            break;
          }
        if (sign < 0) g = -g;
        std::array<Int, 3> cn{nv[0] / g, nv[1] / g, nv[2] / g};
        Int coff = off / g;
        plane_map.emplace(std::vector<Int>{cn[0], cn[1], cn[2], coff}, Plane{cn, coff});
      }
  std::vector<Plane> planes;
  for (auto& [k, p] : plane_map) planes.push_back(p);

  // pruning directions: both orientations of every plane normal, each
  // with atom projections sorted so suffix masses answer "mass of the
  // closed halfspace through a point" in O(log n)
  struct Dir {
    std::array<Int, 3> u;
    std::vector<Int> keys;   // distinct projections, descending
    std::vector<Rat> suffix;  // mass with projection >= keys[i]
  };
  std::vector<Dir> dirs;
  dirs.reserve(planes.size() * 2);
  for (const Plane& pl : planes)
    for (int s : {+1, -1}) {
      Dir d;
      for (int k = 0; k < 3; ++k) d.u[k] = s > 0 ? pl.nv[k] : -pl.nv[k];
      std::vector<std::pair<Int, Rat>> proj(n);
      for (size_t i = 0; i < n; ++i)
        proj[i] = {d.u[0] * P[i][0] + d.u[1] * P[i][1] + d.u[2] * P[i][2], weights[i]};
      std::sort(proj.begin(), proj.end(),
                [](const auto& a, const auto& b) { return a.first > b.first; });
      Rat acc = 0;
      for (size_t i = 0; i < n; ++i) {
        acc += proj[i].second;
        if (i + 1 < n && proj[i + 1].first == proj[i].first) continue;
        d.keys.push_back(proj[i].first);
        d.suffix.push_back(acc);
      }
      dirs.push_back(std::move(d));
    }

  // closed-halfspace mass through hom point (num, v_den) along dirs[di]
  auto dir_mass = [&](size_t di, const std::array<Int, 3>& num, const Int& v_den) {
    const Dir& d = dirs[di];
    Int lhs = d.u[0] * num[0] + d.u[1] * num[1] + d.u[2] * num[2];
    // mass of atoms with key >= lhs / v_den  (v_den > 0)
    size_t lo = 0, hi = d.keys.size();
    while (lo < hi) {
      size_t mid = (lo + hi) / 2;
      if (d.keys[mid] * v_den >= lhs)
        lo = mid + 1;
      else
        hi = mid;
    }
    return lo == 0 ? Rat(0) : d.suffix[lo - 1];
  };

  auto det3 = [](const std::array<Int, 3>& a, const std::array<Int, 3>& b,
                 const std::array<Int, 3>& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
           a[2] * (b[0] * c[1] - b[1] * c[0]);
  };

  std::set<std::vector<Int>> evaluated;  // canonical hom coords of survivors
  std::vector<size_t> dir_order(dirs.size());
  for (size_t i = 0; i < dirs.size(); ++i) dir_order[i] = i;

  const size_t np = planes.size();
  for (size_t a = 0; a < np; ++a)
    for (size_t b = a + 1; b < np; ++b)
      for (size_t c = b + 1; c < np; ++c) {
        Int det = det3(planes[a].nv, planes[b].nv, planes[c].nv);
        if (det == 0) continue;
        std::array<Int, 3> num;
        // Cramer columns
        for (int col = 0; col < 3; ++col) {
          std::array<Int, 3> ra = planes[a].nv, rb = planes[b].nv, rc = planes[c].nv;
          ra[col] = planes[a].off;
          rb[col] = planes[b].off;
          rc[col] = planes[c].off;
          num[col] = det3(ra, rb, rc);
        }
        Int v_den = det;
        if (v_den < 0) {
          v_den = -v_den;
          for (Int& v : num) v = -v;
        }
        // sampled-direction upper bound with early exit; a candidate whose
        // bound drops strictly below the threshold cannot matter
        bool pruned = false;
        for (size_t oi = 0; oi < dir_order.size(); ++oi) {
          Rat bound = dir_mass(dir_order[oi], num, v_den);
          if (have && bound < prune_threshold()) {
            pruned = true;
            if (oi > 0) std::swap(dir_order[oi], dir_order[oi / 2]);
            break;
          }
        }
        if (pruned) continue;
        Int g = v_den;
        for (const Int& v : num) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        std::vector<Int> key{num[0] / g, num[1] / g, num[2] / g, v_den / g};
        if (!evaluated.insert(key).second) continue;
        Coords vc(3);
        for (int k = 0; k < 3; ++k) {
          vc[k] = Rat(key[k], key[3]);
          vc[k].canonicalize();
        }
        consider(Point(std::move(vc)));
      }

  // map the kept points back to the original coordinates
  for (const Point& p : kept_scaled) {
    Coords c(3);
    for (int k = 0; k < 3; ++k) {
      c[k] = p[k] / den;
      c[k].canonicalize();
    }
    out.argmax.emplace_back(std::move(c));
  }
  return out;
}

CandidateScan scan_candidates(const AtomicMeasure& m) {
  const int d = m.dim();
  const size_t n = m.size();
  if (n == 0) throw std::invalid_argument("max_depth: empty measure");
  if (d > 3) throw std::invalid_argument("max_depth: d <= 3 required");
  if (d >= 2 && n >= static_cast<size_t>(d) + 1) {
    return d == 2 ? scan_candidates_2d(m) : scan_candidates_3d(m);
  }
  // d = 1, or too few atoms to span hyperplanes: atoms only
  CandidateScan out;
  bool have = false;
  for (const Point& a : m.atoms()) {
    Rat v = *exact_depth(m, a).value.exact;
    if (!have || v > out.alpha_star) {
      out.alpha_star = v;
      out.argmax.clear();
      have = true;
    }
    if (v == out.alpha_star) out.argmax.push_back(a);
  }
  return out;
}

void general_position_warnings(const AtomicMeasure& m, MedianResult& r);

}  // namespace

Rat max_depth(const AtomicMeasure& m) { return scan_candidates(m).alpha_star; }

ConvexPolytope depth_region_3d_vertices(const AtomicMeasure& m, const Rat& alpha) {
  if (m.dim() != 3) throw DimensionMismatch("depth_region_3d_vertices: d=3 required");
  if (alpha <= 0) throw std::invalid_argument("depth_region_3d_vertices: alpha must be positive");
  if (m.size() < 4) {
    std::vector<Point> keep;
    for (const Point& a : m.atoms())
      if (*exact_depth(m, a).value.exact >= alpha) keep.push_back(a);
    return make_polytope(std::move(keep), 3);
  }
  CandidateScan scan = scan_candidates_3d(m, &alpha);
  return make_polytope(scan.argmax, 3);
}

MedianResult median_2d(const AtomicMeasure& m) {
  if (m.dim() != 2) throw DimensionMismatch("median_2d: d=2 required");
  MedianResult r;
  r.alpha_star = max_depth(m);
  r.body = depth_region_2d(m, r.alpha_star).body;
  r.dimension = r.body.intrinsic_dim;
  if (r.dimension == 2)
    r.classification = MedianClass::FullDimensional;
  else if (r.dimension == 1)
    r.classification = MedianClass::Segment;
  else if (r.dimension == 0)
    r.classification = m.weight_at(r.body.vertices[0]) > 0 ? MedianClass::Atom
                                                           : MedianClass::NonAtomPoint;
  else
    r.classification = MedianClass::Other;
  general_position_warnings(m, r);
  return r;
}

MedianResult median_3d(const AtomicMeasure& m) {
  if (m.dim() != 3) throw DimensionMismatch("median_3d: d=3 required");
  CandidateScan scan = scan_candidates(m);
  MedianResult r;
  r.alpha_star = scan.alpha_star;
  r.body = make_polytope(scan.argmax, 3);
  r.dimension = r.body.intrinsic_dim;
  switch (r.dimension) {
    case 3: r.classification = MedianClass::FullDimensional; break;
    case 1: r.classification = MedianClass::Segment; break;
    case 0:
      r.classification = m.weight_at(r.body.vertices[0]) > 0 ? MedianClass::Atom
                                                             : MedianClass::NonAtomPoint;
      break;
    default: r.classification = MedianClass::Other; break;
  }

  // probe verification of the candidate-vertex hypothesis: relative
  // interior points must stay at alpha_star, stepping outside must drop
  const auto& verts = r.body.vertices;
  Coords centroid(3, Rat(0));
  for (const Point& v : verts)
    for (int k = 0; k < 3; ++k) centroid[k] += v[k];
  for (Rat& c : centroid) c /= static_cast<unsigned long>(verts.size());
  auto depth_at = [&](const Point& p) { return *exact_depth(m, p).value.exact; };
  auto probe_outside = [&](const Point& base, const Coords& dir) {
    Rat scale = 0;
    for (const Rat& v : dir) {
      Rat av = abs(v);
      if (av > scale) scale = av;
    }
    Point p(add_scaled(base.c, Rat(1, 1024) / scale, dir));
    if (depth_at(p) >= r.alpha_star) r.verified = false;
  };

  if (r.dimension >= 1 && depth_at(Point(centroid)) != r.alpha_star) r.verified = false;
  const size_t probe_count = std::min<size_t>(verts.size(), 8);
  for (size_t i = 0; r.verified && r.dimension >= 1 && i < probe_count; ++i) {
    Coords dir = sub(verts[i], Point(centroid));
    if (!is_zero(dir)) probe_outside(verts[i], dir);
  }
  // off-hull probes: one +/- pair per independent direction leaving the hull
  std::vector<Coords> rows;
  for (size_t i = 1; i < verts.size(); ++i) rows.push_back(sub(verts[i], verts[0]));
  Point base = r.dimension == 0 ? verts[0] : Point(centroid);
  while (r.verified) {
    auto u = orthogonal_complement_vector(rows, 3);
    if (!u) break;
    Coords step = primitive(*u);
    probe_outside(base, step);
    Coords neg(step);
    for (Rat& v : neg) v = -v;
    if (r.verified) probe_outside(base, neg);
    rows.push_back(std::move(step));
  }
  general_position_warnings(m, r);
  return r;
}

// defined in lab.cpp (needs the general-position checker); declared here
// to keep median construction self-contained
namespace detail {
std::vector<std::string> describe_position_defects(const AtomicMeasure& m);
}

namespace {
void general_position_warnings(const AtomicMeasure& m, MedianResult& r) {
  r.warnings = detail::describe_position_defects(m);
  if (static_cast<int>(m.size()) == m.dim())
    r.warnings.push_back("n equals d: the median dimension exclusion does not apply");
}
}  // namespace

}  // namespace flagdepth
