#include "flagdepth/lab.hpp"

#include "flagdepth/parallel.hpp"
#include "flagdepth/rng.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

namespace flagdepth {

// ---------------------------------------------------------------------------
// General position.
// ---------------------------------------------------------------------------

namespace {

bool next_combination(std::vector<int>& c, int n) {
  int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> first_combination(int k) {
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  return c;
}

enum class LineMeet { Empty, Point, Line };

// Intersection of the lines p + t*dp and q + s*dq in R^d, exact.
LineMeet meet_lines(const Point& p, const Coords& dp, const Point& q, const Coords& dq,
                    Point* out) {
  const int d = p.dim();
  std::vector<Coords> rows(d, Coords(3));
  for (int k = 0; k < d; ++k) {
    rows[k][0] = dp[k];
    rows[k][1] = -dq[k];
    rows[k][2] = q[k] - p[k];
  }
  // eliminate the 2-column system with the augmented column along
  std::vector<Coords> m = rows;
  int r = 0;
  for (int c = 0; c < 2 && r < d; ++c) {
    int piv = -1;
    for (int i = r; i < d; ++i)
      if (m[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[r]);
    for (int i = 0; i < d; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c] / m[r][c];
      for (int j = c; j < 3; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  for (int i = r; i < d; ++i)
    if (m[i][2] != 0) return LineMeet::Empty;  // inconsistent
  if (r < 2) return LineMeet::Line;            // parallel and coincident
  // unique (t, s): back out t from the reduced rows
  Rat t, s;
  for (int i = 0; i < 2; ++i) {
    if (m[i][0] != 0 && m[i][1] == 0)
      t = m[i][2] / m[i][0];
    else if (m[i][1] != 0 && m[i][0] == 0)
      s = m[i][2] / m[i][1];
    else if (m[i][0] != 0) {
      // row still couples t and s: solve with the other row
      // (full elimination above leaves at most a triangular couple)
      t = (m[i][2] - m[i][1] * s) / m[i][0];
    }
  }
  if (out) {
    Coords c(p.c);
    for (int k = 0; k < d; ++k) c[k] += t * dp[k];
    *out = Point(std::move(c));
  }
  return LineMeet::Point;
}

}  // namespace

GeneralPositionReport check_general_position(std::span<const Point> points) {
  GeneralPositionReport rep;
  const int n = static_cast<int>(points.size());
  if (n == 0) return rep;
  const int d = points[0].dim();

  // (i) no k of the points inside a (k-2)-dimensional flat, k = 2..d+1
  for (int k = 2; k <= d + 1 && rep.in_general_position; ++k) {
    if (k > n) break;
    std::vector<int> c = first_combination(k);
    do {
      std::vector<Point> subset;
      subset.reserve(k);
      for (int idx : c) subset.push_back(points[idx]);
      if (affine_dimension(subset) <= k - 2) {
        rep.in_general_position = false;
        rep.violating_subset = c;
        break;
      }
    } while (next_combination(c, n));
  }

  // (ii) three lines from disjoint index pairs never share a point
  if (d >= 2 && n >= 6) {
    std::vector<int> six = first_combination(6);
    do {
      // partitions of the 6 chosen indices into three unordered pairs
      static const int pairings[15][6] = {
          {0, 1, 2, 3, 4, 5}, {0, 1, 2, 4, 3, 5}, {0, 1, 2, 5, 3, 4}, {0, 2, 1, 3, 4, 5},
          {0, 2, 1, 4, 3, 5}, {0, 2, 1, 5, 3, 4}, {0, 3, 1, 2, 4, 5}, {0, 3, 1, 4, 2, 5},
          {0, 3, 1, 5, 2, 4}, {0, 4, 1, 2, 3, 5}, {0, 4, 1, 3, 2, 5}, {0, 4, 1, 5, 2, 3},
          {0, 5, 1, 2, 3, 4}, {0, 5, 1, 3, 2, 4}, {0, 5, 1, 4, 2, 3}};
      for (const auto& pr : pairings) {
        const Point& a1 = points[six[pr[0]]];
        const Point& a2 = points[six[pr[1]]];
        const Point& b1 = points[six[pr[2]]];
        const Point& b2 = points[six[pr[3]]];
        const Point& c1 = points[six[pr[4]]];
        const Point& c2 = points[six[pr[5]]];
        Coords da = sub(a2, a1), db = sub(b2, b1), dc = sub(c2, c1);
        if (is_zero(da) || is_zero(db) || is_zero(dc)) continue;  // caught by (i)
        Point x;
        LineMeet ab = meet_lines(a1, da, b1, db, &x);
        bool hit = false;
        if (ab == LineMeet::Line) {
          // coincident lines: any point of the third line test
          hit = meet_lines(a1, da, c1, dc, &x) != LineMeet::Empty;
        } else if (ab == LineMeet::Point) {
          Coords off = sub(x, c1);
          hit = is_zero(off) || rank({off, dc}) <= 1;
        }
        if (hit) {
          rep.three_line_ok = false;
          rep.violating_sextuple = {six[pr[0]], six[pr[1]], six[pr[2]],
                                    six[pr[3]], six[pr[4]], six[pr[5]]};
          break;
        }
      }
      if (!rep.three_line_ok) break;
    } while (next_combination(six, n));
  }
  return rep;
}

namespace detail {

std::vector<std::string> describe_position_defects(const AtomicMeasure& m) {
  std::vector<std::string> out;
  GeneralPositionReport rep = check_general_position(m.atoms());
  if (!rep.in_general_position) {
    std::ostringstream os;
    os << "atoms not in general position: subset {";
    for (size_t i = 0; i < rep.violating_subset->size(); ++i)
      os << (i ? "," : "") << (*rep.violating_subset)[i];
    os << "} lies in a lower-dimensional flat";
    out.push_back(os.str());
  }
  if (!rep.three_line_ok) {
    std::ostringstream os;
    os << "three atom-pair lines share a point: indices {";
    for (size_t i = 0; i < rep.violating_sextuple->size(); ++i)
      os << (i ? "," : "") << (*rep.violating_sextuple)[i];
    os << "}";
    out.push_back(os.str());
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Sampling and census.
// ---------------------------------------------------------------------------

namespace {

std::vector<Point> sample_raw(int n, int d, SplitMix64& rng) {
  std::vector<Point> pts;
  pts.reserve(n);
  double spare = 0;
  bool have_spare = false;
  auto draw = [&] {
    if (have_spare) {
      have_spare = false;
      return spare;
    }
    auto [z1, z2] = gaussian_pair(rng);
    spare = z2;
    have_spare = true;
    return z1;
  };
  for (int i = 0; i < n; ++i) {
    Coords c(d);
    for (int k = 0; k < d; ++k) c[k] = rat_round(draw());
    pts.emplace_back(std::move(c));
  }
  return pts;
}

}  // namespace

std::vector<Point> sample_points(int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 1) throw std::invalid_argument("sample_points: n, d >= 1");
  SplitMix64 rng(seed);
  for (;;) {
    std::vector<Point> pts = sample_raw(n, d, rng);
    if (check_general_position(pts).ok()) return pts;
  }
}

CensusReport dimension_census(int n, int d, int trials, std::uint64_t seed) {
  if (d != 2 && d != 3) throw std::invalid_argument("dimension_census: d in {2,3}");
  if (n < 1 || trials < 1) throw std::invalid_argument("dimension_census: n, trials >= 1");
  CensusReport rep;
  rep.n = n;
  rep.d = d;
  rep.trials = trials;
  rep.seed = seed;

  struct TrialOut {
    int dimension;
    std::string classification;
    bool resampled = false;
    bool verified = true;
  };
  std::vector<TrialOut> results(trials);

  parallel_for(static_cast<size_t>(trials), [&](size_t t) {
    SplitMix64 rng(seed ^ static_cast<std::uint64_t>(t));
    TrialOut out;
    std::vector<Point> pts;
    for (;;) {
      pts = sample_raw(n, d, rng);
      if (check_general_position(pts).ok()) break;
      out.resampled = true;
    }
    AtomicMeasure m = AtomicMeasure::empirical(pts);
    MedianResult med = d == 2 ? median_2d(m) : median_3d(m);
    out.dimension = med.dimension;
    out.classification = median_class_name(med.classification);
    out.verified = med.verified;
    results[t] = std::move(out);
  });

  for (int t = 0; t < trials; ++t) {
    const TrialOut& r = results[t];
    rep.dim_histogram[r.dimension] += 1;
    rep.classification_histogram[r.classification] += 1;
    if (r.resampled) rep.gp_resampled_trials.push_back(t);
    if (n != d && r.dimension == d - 1)
      rep.theorem_violations.push_back(
          {t, r.dimension, r.classification, "median of dimension d-1 with n != d"});
    if (d == 2 && n != 4 && n != 2 && r.classification == "NonAtomPoint")
      rep.theorem_violations.push_back(
          {t, r.dimension, r.classification, "single-point median is not an atom"});
    if (!r.verified)
      rep.theorem_violations.push_back(
          {t, r.dimension, r.classification, "median probe verification failed"});
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Fixtures.
// ---------------------------------------------------------------------------

namespace {

Point pt(std::initializer_list<const char*> coords) {
  Coords c;
  c.reserve(coords.size());
  for (const char* s : coords) c.push_back(rat_parse(s));
  return Point(std::move(c));
}

}  // namespace

DiskMixtureMeasure fixture_ex21() {
  DiskMixtureMeasure m;
  m.disk_center = pt({"0", "0"});
  m.disk_radius = 2;
  m.disk_weight = 1;
  m.atoms = {pt({"1", "1"})};
  m.weights = {Rat(1)};
  return m;
}

// inv_sqrt2 rounded at 1e-12; the configuration is stable under small
// perturbations so every stated count survives the rounding.
static const char* kInvSqrt2 = "707106781187/1000000000000";

AtomicMeasure fixture_ex32_k0() {
  std::string s = kInvSqrt2;
  std::string ns = "-" + s;
  return AtomicMeasure::empirical({
      pt({"1", "0", ns.c_str()}),
      pt({"-1", "0", ns.c_str()}),
      pt({"0", "-1", s.c_str()}),
      pt({"0", "1", s.c_str()}),
      pt({"0", "1", "-1/4"}),
      pt({"1/10", "-1", "-1/4"}),
      pt({"3/4", "0", "1/4"}),
      pt({"1/10", "1/10", "0"}),
  });
}

// Perturbed triangular prism with two extra points inside the median
// body of the six prism vertices, on a line crossing both triangle
// interiors; frozen after verifying depth(x7) = depth(x8) = 3/8 and that
// the median is exactly the segment [x7, x8].
AtomicMeasure fixture_ex32_k1() {
  return AtomicMeasure::empirical({
      pt({"1", "0", "-100/101"}),
      pt({"-1/2", "9/10", "-104/103"}),
      pt({"-1/2", "-9/10", "-106/107"}),
      pt({"9/10", "1/10", "110/109"}),
      pt({"-3/5", "1", "112/113"}),
      pt({"-1/2", "-1", "128/127"}),
      pt({"1/50", "1/100", "-1/2"}),
      pt({"-1/50", "-1/100", "1/2"}),
  });
}

// Perturbed unit cube; the median body is full-dimensional at depth 2/8.
AtomicMeasure fixture_ex32_k3() {
  return AtomicMeasure::empirical({
      pt({"54/53", "58/59", "62/61"}),
      pt({"66/67", "72/71", "-72/73"}),
      pt({"80/79", "-82/83", "88/89"}),
      pt({"96/97", "-102/101", "-104/103"}),
      pt({"-106/107", "110/109", "112/113"}),
      pt({"-128/127", "130/131", "-136/137"}),
      pt({"-138/139", "-150/149", "152/151"}),
      pt({"-158/157", "-162/163", "-168/167"}),
  });
}

AtomicMeasure fixture_ex42() {
  return AtomicMeasure::empirical({
      pt({"-1", "1/3", "-2/3"}),
      pt({"1", "0", "-1"}),
      pt({"0", "3/2", "-1"}),
      pt({"-1/2", "0", "1"}),
      pt({"1", "0", "4/3"}),
      pt({"0", "2", "1"}),
      pt({"-1/3", "1/2", "-2"}),
      pt({"1/3", "1/2", "2"}),
  });
}

// ---------------------------------------------------------------------------
// Example reproduction.
// ---------------------------------------------------------------------------

namespace {

struct Reporter {
  ExampleReport rep;

  void check(const std::string& what, bool ok, std::string detail = "") {
    rep.checks.push_back({what, ok, std::move(detail)});
    rep.passed = rep.passed && ok;
  }
};

void reproduce_ex21(Reporter& r) {
  DiskMixtureMeasure m = fixture_ex21();
  Point x = pt({"1", "0"});
  DepthResult res = mixture_depth_2d(m, x);
  const double expected = 1.0 / 3.0 - std::sqrt(3.0) / (4.0 * M_PI);
  r.check("depth(1,0) = 1/3 - sqrt(3)/(4*pi)", std::fabs(res.value.approx - expected) <= 1e-9,
          "got " + std::to_string(res.value.approx));
  r.check("no closed halfspace attains the depth", !res.attained);

  double closed = mass_closed(m, ClosedHalfspace{x, Direction{Rat(1), Rat(0)}}).approx;
  r.check("closed mass at v=(1,0) exceeds the depth by the atom weight",
          std::fabs(closed - res.value.approx - 1.0) <= 1e-9);

  bool monotone = true, from_above = true;
  double prev = 0;
  double last = 0;
  for (int k = 1; k <= 1000; ++k) {
    double ang = -1.0 / k;
    Coords u{rat_round(std::cos(ang)), rat_round(std::sin(ang))};
    double mk = mass_closed(m, ClosedHalfspace{x, Direction(u)}).approx;
    if (k > 1 && mk > prev + 1e-12) monotone = false;
    if (mk < res.value.approx - 1e-12) from_above = false;
    prev = mk;
    last = mk;
  }
  r.check("masses along v_n decrease monotonically", monotone);
  r.check("masses along v_n stay above the depth", from_above);
  r.check("masses along v_n converge to the depth", std::fabs(last - res.value.approx) <= 1e-5);

  FlagHalfspace expect(x, {Direction{Rat(1), Rat(0)}, Direction{Rat(0), Rat(-1)}});
  r.check("minimising flag is {x} u {(1,t): t<0} u {s>1}",
          res.witness.normals()[0] == expect.normals()[0] &&
              res.witness.normals()[1] == expect.normals()[1]);
}

void reproduce_ex32_k0(Reporter& r) {
  AtomicMeasure m = fixture_ex32_k0();
  r.check("points in general position", check_general_position(m.atoms()).ok());
  Point x8 = pt({"1/10", "1/10", "0"});
  DepthResult res = exact_depth(m, x8);
  r.check("depth(x8) = 3/8", *res.value.exact == Rat(3, 8), rat_str(*res.value.exact));
  r.check("witness mass matches", *mass_flag(m, res.witness).exact == Rat(3, 8));

  const std::vector<Coords> us = {
      {rat_parse("-7/10"), rat_parse("-3/10"), rat_parse("-3/5")},
      {rat_parse("-2/5"), rat_parse("-1/10"), rat_parse("9/10")},
      {rat_parse("-1/5"), rat_parse("4/5"), rat_parse("3/5")},
      {rat_parse("1"), rat_parse("1/10"), rat_parse("0")},
  };
  for (size_t i = 0; i < us.size(); ++i) {
    Rat mass = *mass_closed(m, ClosedHalfspace{x8, Direction(us[i])}).exact;
    r.check("H_{x8,u" + std::to_string(i + 1) + "} holds exactly 3 atoms", mass == Rat(3, 8),
            rat_str(mass));
  }

  SplitMix64 rng(20240817u);
  bool probes_ok = true;
  for (int t = 0; t < 1000; ++t) {
    Coords c(3);
    for (int k = 0; k < 3; ++k) c[k] = rat_round(3.0 * rng.u01() - 1.5, 1'000'000);
    Point y(std::move(c));
    if (y == x8) continue;
    if (*exact_depth(m, y).value.exact > Rat(2, 8)) {
      probes_ok = false;
      break;
    }
  }
  r.check("1000 random probes have depth <= 2/8", probes_ok);

  MedianResult med = median_3d(m);
  r.check("median is the single atom x8",
          med.classification == MedianClass::Atom && med.body.vertices.size() == 1 &&
              med.body.vertices[0] == x8 && med.alpha_star == Rat(3, 8));
  r.check("median probes verified", med.verified);
}

void reproduce_ex32_k1(Reporter& r) {
  AtomicMeasure m = fixture_ex32_k1();
  r.check("points in general position", check_general_position(m.atoms()).ok());
  Point x7 = pt({"1/50", "1/100", "-1/2"});
  Point x8 = pt({"-1/50", "-1/100", "1/2"});
  r.check("depth(x7) = 3/8", *exact_depth(m, x7).value.exact == Rat(3, 8));
  r.check("depth(x8) = 3/8", *exact_depth(m, x8).value.exact == Rat(3, 8));
  MedianResult med = median_3d(m);
  bool seg = med.classification == MedianClass::Segment && med.body.vertices.size() == 2;
  r.check("median is a segment at depth 3/8", seg && med.alpha_star == Rat(3, 8));
  if (seg) {
    bool ends = (med.body.vertices[0] == x8 && med.body.vertices[1] == x7) ||
                (med.body.vertices[0] == x7 && med.body.vertices[1] == x8);
    r.check("segment endpoints are x7 and x8", ends);
  }
  r.check("median probes verified", med.verified);
}

void reproduce_ex32_k3(Reporter& r) {
  AtomicMeasure m = fixture_ex32_k3();
  r.check("points in general position", check_general_position(m.atoms()).ok());
  MedianResult med = median_3d(m);
  r.check("median is full-dimensional", med.classification == MedianClass::FullDimensional);
  r.check("maximum depth is 2/8", med.alpha_star == Rat(2, 8), rat_str(med.alpha_star));
  r.check("median probes verified", med.verified);
}

void reproduce_ex42(Reporter& r) {
  AtomicMeasure m = fixture_ex42();
  r.check("points in general position", check_general_position(m.atoms()).ok());
  MedianResult med = median_3d(m);
  Point e1 = pt({"0", "1/2", "0"});
  Point e2 = pt({"3/44", "1/2", "9/22"});
  r.check("maximum depth is 3/8", med.alpha_star == Rat(3, 8), rat_str(med.alpha_star));
  bool seg = med.classification == MedianClass::Segment && med.body.vertices.size() == 2;
  r.check("median is a segment", seg);
  if (seg) {
    bool ends = (med.body.vertices[0] == e1 && med.body.vertices[1] == e2) ||
                (med.body.vertices[0] == e2 && med.body.vertices[1] == e1);
    r.check("endpoints are (0,1/2,0) and (3/44,1/2,9/22) exactly", ends);
  }
  r.check("median probes verified", med.verified);

  // the segment lies on the line through x7 and x8 and holds no atom
  Point x7 = pt({"-1/3", "1/2", "-2"});
  Point x8 = pt({"1/3", "1/2", "2"});
  Coords d78 = sub(x8, x7);
  bool on_line = rank({sub(e1, x7), d78}) == 1 && rank({sub(e2, x7), d78}) == 1;
  r.check("median segment lies on line(x7, x8)", on_line);
  bool atom_free = true;
  for (const Point& a : m.atoms())
    if (in_convex_hull(a, {e1, e2})) atom_free = false;
  r.check("median segment contains no atoms", atom_free);

  ConvexPolytope d28 = depth_region_3d_vertices(m, Rat(2, 8));
  r.check("both endpoints lie inside D_{2/8}",
          polytope_contains(d28, e1) && polytope_contains(d28, e2));
}

}  // namespace

std::vector<std::string> example_ids() {
  return {"ex2.1", "ex3.2-k0", "ex3.2-k1", "ex3.2-k3", "ex4.2"};
}

ExampleReport reproduce_example(const std::string& id) {
  Reporter r;
  r.rep.id = id;
  if (id == "ex2.1")
    reproduce_ex21(r);
  else if (id == "ex3.2-k0")
    reproduce_ex32_k0(r);
  else if (id == "ex3.2-k1")
    reproduce_ex32_k1(r);
  else if (id == "ex3.2-k3")
    reproduce_ex32_k3(r);
  else if (id == "ex4.2")
    reproduce_ex42(r);
  else
    throw std::invalid_argument("unknown example id: " + id);
  return r.rep;
}

}  // namespace flagdepth
