#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagdepth/lab.hpp"
#include "flagdepth/measure.hpp"
#include "flagdepth/rng.hpp"

#include <cmath>

using namespace flagdepth;

namespace {

Point p2(const char* a, const char* b) { return Point{rat_parse(a), rat_parse(b)}; }

AtomicMeasure square_atoms() {
  return AtomicMeasure::empirical({p2("0", "0"), p2("1", "0"), p2("0", "1"), p2("1", "1")});
}

AtomicMeasure triangle_atoms() {
  return AtomicMeasure::empirical({p2("0", "0"), p2("1", "0"), p2("0", "1")});
}

}  // namespace

TEST_CASE("atomic measures merge duplicates and drop zero weights") {
  AtomicMeasure m({p2("1", "2"), p2("1", "2"), p2("0", "0"), p2("3", "3")},
                  {Rat(1, 4), Rat(1, 4), Rat(1, 2), Rat(0)});
  CHECK(m.size() == 2);
  CHECK(m.total_mass() == Rat(1));
  CHECK(m.weight_at(p2("1", "2")) == Rat(1, 2));
  CHECK(m.weight_at(p2("3", "3")) == Rat(0));
  CHECK_THROWS_AS(AtomicMeasure({p2("0", "0")}, {Rat(-1)}), std::invalid_argument);
}

TEST_CASE("closed and open halfplane masses on atoms") {
  AtomicMeasure tri = triangle_atoms();
  ClosedHalfspace h{p2("1/4", "1/4"), Direction{Rat(-1), Rat(-1)}};
  CHECK(*mass_closed(tri, h).exact == Rat(1, 3));

  AtomicMeasure sq = square_atoms();
  ClosedHalfspace upper{p2("0", "0"), Direction{Rat(0), Rat(1)}};
  CHECK(*mass_open(sq, upper).exact == Rat(1, 2));   // boundary atoms do not count
  CHECK(*mass_closed(sq, upper).exact == Rat(1));    // everything on or above y=0

  // base far outside the support, normal pointing back at it
  ClosedHalfspace all{p2("-100", "-100"), Direction{Rat(1), Rat(1)}};
  CHECK(*mass_closed(sq, all).exact == sq.total_mass());
  ClosedHalfspace none{p2("100", "100"), Direction{Rat(1), Rat(1)}};
  CHECK(*mass_open(sq, none).exact == Rat(0));
}

TEST_CASE("disk mixture masses match the circular segment formula") {
  DiskMixtureMeasure m = fixture_ex21();
  const double frac = (4.0 * M_PI / 3.0 - std::sqrt(3.0)) / (4.0 * M_PI);

  ClosedHalfspace h{p2("1", "0"), Direction{Rat(1), Rat(0)}};
  CHECK(mass_closed(m, h).approx == doctest::Approx(1.0 + frac).epsilon(1e-9));
  CHECK(mass_open(m, h).approx == doctest::Approx(frac).epsilon(1e-9));  // atom excluded

  // far away halfspace holds everything / nothing
  ClosedHalfspace all{p2("-10", "0"), Direction{Rat(1), Rat(0)}};
  CHECK(mass_closed(m, all).approx == doctest::Approx(2.0).epsilon(1e-12));
  ClosedHalfspace none{p2("10", "0"), Direction{Rat(1), Rat(0)}};
  CHECK(mass_closed(m, none).approx == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_FALSE(mass_closed(m, h).exact.has_value());
}

TEST_CASE("flag mass of the mixture counts the open halfplane only") {
  DiskMixtureMeasure m = fixture_ex21();
  FlagHalfspace f(p2("1", "0"), {Direction{Rat(1), Rat(0)}, Direction{Rat(0), Rat(-1)}});
  const double frac = (4.0 * M_PI / 3.0 - std::sqrt(3.0)) / (4.0 * M_PI);
  CHECK(mass_flag(m, f).approx == doctest::Approx(frac).epsilon(1e-9));
}

TEST_CASE("closed = open + boundary and the flag partition identity") {
  SplitMix64 rng(71);
  AtomicMeasure sq = square_atoms();
  for (int t = 0; t < 100; ++t) {
    Coords base(2), n(2);
    for (int k = 0; k < 2; ++k) base[k] = Rat(static_cast<long>(rng.next() % 21) - 10, 4);
    do
      for (int k = 0; k < 2; ++k) n[k] = Rat(static_cast<long>(rng.next() % 13) - 6);
    while (is_zero(n));
    ClosedHalfspace h{Point(base), Direction(n)};
    Rat boundary = 0;
    for (size_t i = 0; i < sq.size(); ++i)
      if (side_of(h, sq.atom(i)) == Side::Boundary) boundary += sq.weight(i);
    CHECK(*mass_closed(sq, h).exact == *mass_open(sq, h).exact + boundary);

    Coords n2(2);
    do
      for (int k = 0; k < 2; ++k) n2[k] = Rat(static_cast<long>(rng.next() % 13) - 6);
    while (rank({n, n2}) != 2);
    FlagHalfspace f(Point(base), {Direction(n), Direction(n2)});
    Rat sum = *mass_flag(sq, f).exact + *mass_flag(sq, flag_complement(f)).exact;
    CHECK(sum == sq.total_mass() + sq.weight_at(Point(base)));
    // sandwich: open <= flag <= closed for the shared leading normal
    CHECK(*mass_open(sq, h).exact <= *mass_flag(sq, f).exact);
    CHECK(*mass_flag(sq, f).exact <= *mass_closed(sq, h).exact);
  }
}

TEST_CASE("mixture closed mass is continuous in the angle except at atom angles") {
  DiskMixtureMeasure m = fixture_ex21();
  Point x = p2("1", "0");
  // the only discontinuity of the angular mass at x is at the atom
  // direction (normal (1,0)); scan a dense grid elsewhere
  double prev = -1;
  bool continuous = true;
  for (int k = 1; k < 2000; ++k) {
    double ang = 0.01 + (2 * M_PI - 0.02) * k / 2000.0;  // stays clear of angle 0
    Coords u{rat_round(std::cos(ang)), rat_round(std::sin(ang))};
    double v = mass_closed(m, ClosedHalfspace{x, Direction(u)}).approx;
    if (k > 1 && std::fabs(v - prev) > 0.02) continuous = false;
    prev = v;
  }
  CHECK(continuous);
  // and the jump at the atom angle equals the atom weight
  double left = mass_closed(m, ClosedHalfspace{x, Direction{rat_round(std::cos(-1e-6)),
                                                            rat_round(std::sin(-1e-6))}})
                    .approx;
  double at = mass_closed(m, ClosedHalfspace{x, Direction{Rat(1), Rat(0)}}).approx;
  CHECK(at - left == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("restrict_to_hyperplane keeps exactly the on-plane atoms") {
  AtomicMeasure sq = square_atoms();
  Hyperplane line{p2("0", "0"), Direction{Rat(0), Rat(1)}};  // y = 0
  auto [restricted, chart] = restrict_to_hyperplane(sq, line);
  CHECK(restricted.size() == 2);
  CHECK(restricted.total_mass() == Rat(1, 2));
  CHECK(restricted.dim() == 1);
  // chart round-trip
  for (size_t i = 0; i < restricted.size(); ++i) {
    Point back = chart.to_ambient(restricted.atom(i));
    CHECK(sq.weight_at(back) == restricted.weight(i));
  }

  Hyperplane off{p2("0", "1/3"), Direction{Rat(0), Rat(1)}};
  auto [none, chart2] = restrict_to_hyperplane(sq, off);
  CHECK(none.size() == 0);
  CHECK(none.total_mass() == Rat(0));
}

TEST_CASE("restriction to a plane through three atoms of the segment-median fixture") {
  AtomicMeasure m = fixture_ex42();
  // plane through x7, x8, x1
  Point x7{rat_parse("-1/3"), rat_parse("1/2"), rat_parse("-2")};
  Point x8{rat_parse("1/3"), rat_parse("1/2"), rat_parse("2")};
  Point x1{rat_parse("-1"), rat_parse("1/3"), rat_parse("-2/3")};
  Coords d1 = sub(x8, x7), d2 = sub(x1, x7);
  auto n = orthogonal_complement_vector({d1, d2}, 3);
  REQUIRE(n.has_value());
  auto [restricted, chart] = restrict_to_hyperplane(m, Hyperplane{x7, Direction(*n)});
  CHECK(restricted.size() == 3);
  CHECK(restricted.total_mass() == Rat(3, 8));
}

TEST_CASE("chart basis is an exact basis of the normal complement") {
  Hyperplane p{Point{Rat(1), Rat(2), Rat(3)}, Direction{Rat(2), Rat(-3), Rat(5)}};
  HyperplaneChart chart(p);
  CHECK(chart.basis().size() == 2);
  for (const Coords& b : chart.basis()) CHECK(dot(b, p.normal.c) == 0);
  // lift keeps on-plane sign structure
  Direction w{Rat(4), Rat(-7)};
  Direction lifted = chart.lift(w);
  CHECK(lifted.dim() == 3);
}
