#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagdepth/depth.hpp"
#include "flagdepth/lab.hpp"
#include "test_support.hpp"

#include <cmath>

using namespace flagdepth;
using namespace flagdepth::testsupport;

namespace {

Point p1(const char* a) { return Point{rat_parse(a)}; }
Point p2(const char* a, const char* b) { return Point{rat_parse(a), rat_parse(b)}; }

AtomicMeasure line_atoms() {
  return AtomicMeasure::empirical({p1("0"), p1("1"), p1("2"), p1("3")});
}

AtomicMeasure square_atoms() {
  return AtomicMeasure::empirical({p2("0", "0"), p2("1", "0"), p2("0", "1"), p2("1", "1")});
}

AtomicMeasure triangle_atoms() {
  return AtomicMeasure::empirical({p2("0", "0"), p2("1", "0"), p2("0", "1")});
}

}  // namespace

TEST_CASE("depth_1d: weight at x plus the lighter open halfline") {
  AtomicMeasure m = line_atoms();
  DepthResult at1 = depth_1d(m, p1("1"));
  CHECK(*at1.value.exact == Rat(1, 2));
  CHECK(*mass_flag(m, at1.witness).exact == Rat(1, 2));
  CHECK(*depth_1d(m, p1("1/2")).value.exact == Rat(1, 4));
  CHECK(*depth_1d(m, p1("5")).value.exact == Rat(0));
}

TEST_CASE("sweep basics") {
  AtomicMeasure tri = triangle_atoms();
  CHECK(*depth_sweep_2d(tri, p2("1/4", "1/4")).value.exact == Rat(1, 3));
  CHECK(*depth_sweep_2d(tri, p2("2", "2")).value.exact == Rat(0));
  AtomicMeasure sq = square_atoms();
  CHECK(*depth_sweep_2d(sq, p2("1/2", "1/4")).value.exact == Rat(1, 4));
  CHECK(*depth_sweep_2d(sq, p2("1/2", "1/2")).value.exact == Rat(1, 2));
}

TEST_CASE("sweep handles atoms at the query and collinear data") {
  AtomicMeasure twin({p2("0", "0"), p2("1", "1")}, {Rat(1, 2), Rat(1, 2)});
  CHECK(*depth_sweep_2d(twin, p2("0", "0")).value.exact == Rat(1, 2));

  AtomicMeasure col = AtomicMeasure::empirical({p2("-1", "0"), p2("1", "0")});
  // every flag through the origin picks up exactly one of the two atoms
  CHECK(*depth_sweep_2d(col, p2("0", "0")).value.exact == Rat(1, 2));
  DepthResult r = exact_depth(col, p2("0", "0"));
  CHECK(*r.value.exact == Rat(1, 2));
  CHECK(*mass_flag(col, r.witness).exact == Rat(1, 2));
}

TEST_CASE("exact depth on the paper fixtures") {
  AtomicMeasure k0 = fixture_ex32_k0();
  Point x8{rat_parse("1/10"), rat_parse("1/10"), rat_parse("0")};
  DepthResult rk0 = exact_depth(k0, x8);
  CHECK(*rk0.value.exact == Rat(3, 8));
  CHECK(*mass_flag(k0, rk0.witness).exact == Rat(3, 8));
  CHECK(rk0.trace.size() == 3);

  AtomicMeasure seg = fixture_ex42();
  Point e1{rat_parse("0"), rat_parse("1/2"), rat_parse("0")};
  DepthResult rseg = exact_depth(seg, e1);
  CHECK(*rseg.value.exact == Rat(3, 8));
  CHECK(*mass_flag(seg, rseg.witness).exact == Rat(3, 8));
}

TEST_CASE("minimizing_flag spec cases") {
  AtomicMeasure sq = square_atoms();
  FlagHalfspace f = minimizing_flag(sq, p2("1/2", "1/2"));
  CHECK(*mass_flag(sq, f).exact == Rat(1, 2));

  AtomicMeasure solo({p2("2", "3")}, {Rat(5, 7)});
  FlagHalfspace fs = minimizing_flag(solo, p2("2", "3"));
  CHECK(*mass_flag(solo, fs).exact == Rat(5, 7));
}

TEST_CASE("depth is unchanged by a zero-weight atom") {
  AtomicMeasure base = triangle_atoms();
  AtomicMeasure padded({p2("0", "0"), p2("1", "0"), p2("0", "1"), p2("7", "7")},
                       {Rat(1, 3), Rat(1, 3), Rat(1, 3), Rat(0)});
  Point x = p2("1/4", "1/4");
  CHECK(*exact_depth(base, x).value.exact == *exact_depth(padded, x).value.exact);
}

TEST_CASE("oracle equivalence: recursion matches the sweep on random planar cases") {
  SplitMix64 rng(101);
  for (int t = 0; t < 60; ++t) {
    DepthCase c = random_case_2d(rng, t);
    DepthResult sweep = depth_sweep_2d(c.measure, c.query);
    DepthResult exact = exact_depth(c.measure, c.query);
    REQUIRE(*exact.value.exact == *sweep.value.exact);
    // both witnesses must reproduce the value exactly
    CHECK(*mass_flag(c.measure, exact.witness).exact == *exact.value.exact);
    CHECK(*mass_flag(c.measure, sweep.witness).exact == *sweep.value.exact);
  }
}

TEST_CASE("sampled upper bound dominates the exact depth") {
  SplitMix64 rng(103);
  for (int t = 0; t < 25; ++t) {
    DepthCase c = random_case_2d(rng, t);
    Rat exact = *exact_depth(c.measure, c.query).value.exact;
    Rat bound = *sampled_depth_upper_bound(c.measure, c.query, 2000, 1000 + t).exact;
    CHECK(exact <= bound);
    // closed mass at any sampled direction is an upper bound too
    CHECK(exact <= *mass_closed(c.measure,
                                ClosedHalfspace{c.query, Direction{Rat(3), Rat(-2)}})
                       .exact);
  }
  // a single direction pointing away from all mass gives the trivial bound
  AtomicMeasure tri = triangle_atoms();
  Rat triv = *sampled_depth_upper_bound(tri, p2("-5", "-5"), 1, 42).exact;
  CHECK(triv <= tri.total_mass());
}

TEST_CASE("affine invariance of the exact depth") {
  SplitMix64 rng(107);
  for (int t = 0; t < 12; ++t) {
    const int d = 2 + static_cast<int>(rng.next() % 2);
    const int n = 3 + static_cast<int>(rng.next() % 6);
    std::vector<Point> pts;
    for (int i = 0; i < n; ++i) pts.push_back(rand_point(rng, d));
    Point x = rand_point(rng, d);
    std::vector<Coords> A;
    do {
      A.clear();
      for (int r = 0; r < d; ++r) {
        Coords row(d);
        for (int c2 = 0; c2 < d; ++c2) row[c2] = small_rat(rng, 5, 3);
        A.push_back(row);
      }
    } while (rank(A) != d);
    Point shift = rand_point(rng, d);
    auto apply = [&](const Point& p) {
      Coords q(d);
      for (int r = 0; r < d; ++r) q[r] = dot(A[r], p.c) + shift[r];
      return Point(std::move(q));
    };
    std::vector<Point> mapped;
    for (const Point& p : pts) mapped.push_back(apply(p));
    AtomicMeasure m = AtomicMeasure::empirical(pts);
    AtomicMeasure mm = AtomicMeasure::empirical(mapped);
    CHECK(*exact_depth(m, x).value.exact == *exact_depth(mm, apply(x)).value.exact);
  }
}

TEST_CASE("depth never exceeds closed masses over sampled directions") {
  SplitMix64 rng(109);
  AtomicMeasure sq = square_atoms();
  Point x = p2("1/3", "2/5");
  Rat v = *exact_depth(sq, x).value.exact;
  for (int t = 0; t < 200; ++t) {
    Coords u(2);
    do
      for (int k = 0; k < 2; ++k) u[k] = small_rat(rng, 9, 5);
    while (is_zero(u));
    CHECK(v <= *mass_closed(sq, ClosedHalfspace{x, Direction(u)}).exact);
  }
}

TEST_CASE("mixture depth at the paper's point: flag infimum, not attained") {
  DiskMixtureMeasure m = fixture_ex21();
  DepthResult r = mixture_depth_2d(m, p2("1", "0"));
  const double expected = 1.0 / 3.0 - std::sqrt(3.0) / (4.0 * M_PI);
  CHECK(r.value.approx == doctest::Approx(expected).epsilon(1e-9));
  CHECK_FALSE(r.attained);
  CHECK(r.witness.normals()[0] == Direction{Rat(1), Rat(0)});
  CHECK(r.witness.normals()[1] == Direction{Rat(0), Rat(-1)});
}

TEST_CASE("mixture depth at the disk centre and far away") {
  DiskMixtureMeasure m = fixture_ex21();
  DepthResult centre = mixture_depth_2d(m, p2("0", "0"));
  CHECK(centre.value.approx == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(centre.attained);

  DepthResult far = mixture_depth_2d(m, p2("10", "10"));
  CHECK(far.value.approx == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(far.attained);
}

TEST_CASE("mixture depth agrees with a dense angular scan") {
  DiskMixtureMeasure m = fixture_ex21();
  for (const Point& x : {p2("0", "0"), p2("1", "0"), p2("1/2", "-1/3"), p2("3", "1")}) {
    DepthResult r = mixture_depth_2d(m, x);
    double scan = 1e300;
    for (int k = 0; k < 10000; ++k) {
      double ang = 2 * M_PI * k / 10000.0;
      Coords u{rat_round(std::cos(ang)), rat_round(std::sin(ang))};
      scan = std::min(scan, mass_closed(m, ClosedHalfspace{x, Direction(u)}).approx);
    }
    CHECK(r.value.approx <= scan + 1e-9);
    CHECK(r.value.approx == doctest::Approx(scan).epsilon(1e-6));
  }
}

TEST_CASE("mixture upper bound dominates the mixture depth") {
  DiskMixtureMeasure m = fixture_ex21();
  Point x = p2("1", "0");
  DepthResult r = mixture_depth_2d(m, x);
  MassValue b = sampled_depth_upper_bound(m, x, 20000, 9);
  CHECK(b.approx >= r.value.approx - 1e-9);
}

TEST_CASE("dimension mismatches are rejected") {
  AtomicMeasure sq = square_atoms();
  CHECK_THROWS_AS(exact_depth(sq, Point{Rat(1)}), DimensionMismatch);
  CHECK_THROWS_AS(depth_sweep_2d(sq, Point{Rat(1), Rat(1), Rat(1)}), DimensionMismatch);
  CHECK_THROWS_AS(depth_1d(sq, p2("0", "0")), DimensionMismatch);
}
