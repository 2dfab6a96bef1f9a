#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "flagdepth/geometry.hpp"
#include "flagdepth/rng.hpp"

using namespace flagdepth;

namespace {

Rat rr(SplitMix64& rng, int lo = -50, int hi = 50) {
  long num = lo + static_cast<long>(rng.next() % static_cast<std::uint64_t>(hi - lo + 1));
  long den = 1 + static_cast<long>(rng.next() % 8);
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Point rpoint(SplitMix64& rng, int d) {
  Coords c(d);
  for (int k = 0; k < d; ++k) c[k] = rr(rng);
  return Point(std::move(c));
}

}  // namespace

TEST_CASE("side_of sign predicate") {
  ClosedHalfspace h{Point{Rat(0), Rat(0)}, Direction{Rat(1), Rat(0)}};
  CHECK(side_of(h, Point{Rat(2), Rat(0)}) == Side::Inside);
  CHECK(side_of(h, Point{Rat(0), Rat(5)}) == Side::Boundary);
  CHECK(side_of(h, Point{Rat(-1), Rat(3)}) == Side::Outside);
  // the atom of the planar mixture example sits on the boundary of H_{(1,0),(1,0)}
  ClosedHalfspace h2{Point{Rat(1), Rat(0)}, Direction{Rat(1), Rat(0)}};
  CHECK(side_of(h2, Point{Rat(1), Rat(1)}) == Side::Boundary);
  CHECK_THROWS_AS(side_of(h, Point{Rat(1), Rat(1), Rat(1)}), DimensionMismatch);
}

TEST_CASE("side_of is invariant under positive rescaling of the normal") {
  SplitMix64 rng(11);
  for (int t = 0; t < 200; ++t) {
    Point base = rpoint(rng, 3);
    Coords n(3);
    do
      for (int k = 0; k < 3; ++k) n[k] = rr(rng);
    while (is_zero(n));
    Point y = rpoint(rng, 3);
    Rat scale = Rat(1 + static_cast<long>(rng.next() % 90), 1 + static_cast<long>(rng.next() % 9));
    Coords sn(n);
    for (Rat& v : sn) v *= scale;
    CHECK(side_of({base, Direction(n)}, y) == side_of({base, Direction(sn)}, y));
  }
}

TEST_CASE("flag membership follows the lexicographic rule") {
  // minimising flag of the planar mixture example: {x} u {(1,t):t<0} u {s>1}
  FlagHalfspace f(Point{Rat(1), Rat(0)}, {Direction{Rat(1), Rat(0)}, Direction{Rat(0), Rat(-1)}});
  CHECK(flag_contains(f, Point{Rat(2), Rat(7)}));
  CHECK(flag_contains(f, Point{Rat(1), Rat(-3)}));
  CHECK_FALSE(flag_contains(f, Point{Rat(1), Rat(3)}));
  CHECK(flag_contains(f, f.center()));
}

TEST_CASE("flag constructor validates the normals") {
  CHECK_THROWS_AS(FlagHalfspace(Point{Rat(0), Rat(0)},
                                {Direction{Rat(1), Rat(1)}, Direction{Rat(2), Rat(2)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(FlagHalfspace(Point{Rat(0), Rat(0)}, {Direction{Rat(1), Rat(0)}}),
                  std::invalid_argument);
}

TEST_CASE("complement flips membership everywhere except the center") {
  FlagHalfspace f(Point{Rat(1), Rat(0)}, {Direction{Rat(1), Rat(0)}, Direction{Rat(0), Rat(-1)}});
  FlagHalfspace fc = flag_complement(f);
  CHECK(fc.normals()[0] == Direction{Rat(-1), Rat(0)});
  CHECK(fc.normals()[1] == Direction{Rat(0), Rat(1)});
  CHECK(flag_contains(fc, fc.center()));

  SplitMix64 rng(23);
  FlagHalfspace fcc = flag_complement(fc);
  for (int t = 0; t < 1000; ++t) {
    Point y = rpoint(rng, 2);
    if (y == f.center()) continue;
    CHECK(flag_contains(f, y) != flag_contains(fc, y));
    CHECK(flag_contains(f, y) == flag_contains(fcc, y));
  }
}

TEST_CASE("antipodal partition: exactly one of y and 2x-y belongs to a flag") {
  SplitMix64 rng(31);
  for (int t = 0; t < 50; ++t) {
    const int d = 2 + static_cast<int>(rng.next() % 3);
    Point x = rpoint(rng, d);
    std::vector<Direction> normals;
    for (;;) {
      normals.clear();
      std::vector<Coords> rows;
      for (int k = 0; k < d; ++k) {
        Coords n(d);
        do
          for (int j = 0; j < d; ++j) n[j] = rr(rng);
        while (is_zero(n));
        rows.push_back(n);
        normals.emplace_back(n);
      }
      if (rank(rows) == d) break;
    }
    FlagHalfspace f(x, normals);
    for (int s = 0; s < 20; ++s) {
      Point y = rpoint(rng, d);
      if (y == x) continue;
      Coords mirror(x.c);
      for (int k = 0; k < d; ++k) mirror[k] = x[k] * 2 - y[k];
      CHECK(flag_contains(f, y) != flag_contains(f, Point(mirror)));
    }
  }
}

TEST_CASE("flag membership agrees with side_of beyond the leading boundary") {
  SplitMix64 rng(41);
  FlagHalfspace f(Point{Rat(0), Rat(0), Rat(0)},
                  {Direction{Rat(1), Rat(2), Rat(-1)}, Direction{Rat(0), Rat(1), Rat(1)},
                   Direction{Rat(1), Rat(0), Rat(0)}});
  ClosedHalfspace lead{f.center(), f.normals()[0]};
  for (int t = 0; t < 500; ++t) {
    Point y = rpoint(rng, 3);
    if (side_of(lead, y) == Side::Inside) CHECK(flag_contains(f, y));
    if (side_of(lead, y) == Side::Outside) CHECK_FALSE(flag_contains(f, y));
  }
}

TEST_CASE("affine_dimension") {
  CHECK(affine_dimension(std::vector<Point>{Point{Rat(0), Rat(0)}}) == 0);
  CHECK(affine_dimension(std::vector<Point>{Point{Rat(0), Rat(0), Rat(0)},
                                            Point{Rat(1), Rat(1), Rat(1)},
                                            Point{Rat(2), Rat(2), Rat(2)}}) == 1);
  CHECK_THROWS_AS(affine_dimension(std::vector<Point>{}), std::invalid_argument);
}

TEST_CASE("affine_dimension is invariant under invertible rational affine maps") {
  SplitMix64 rng(53);
  for (int t = 0; t < 30; ++t) {
    const int d = 2 + static_cast<int>(rng.next() % 2);
    std::vector<Point> pts;
    const int n = 1 + static_cast<int>(rng.next() % 6);
    for (int i = 0; i < n; ++i) pts.push_back(rpoint(rng, d));
    // random invertible matrix
    std::vector<Coords> A;
    do {
      A.clear();
      for (int r = 0; r < d; ++r) {
        Coords row(d);
        for (int c = 0; c < d; ++c) row[c] = rr(rng, -6, 6);
        A.push_back(row);
      }
    } while (rank(A) != d);
    Point shift = rpoint(rng, d);
    std::vector<Point> mapped;
    for (const Point& p : pts) {
      Coords q(d);
      for (int r = 0; r < d; ++r) q[r] = dot(A[r], p.c) + shift[r];
      mapped.emplace_back(std::move(q));
    }
    CHECK(affine_dimension(pts) == affine_dimension(mapped));
  }
}

TEST_CASE("primitive and lex ordering") {
  CHECK(primitive(Coords{Rat(2, 3), Rat(-4, 3)}) == Coords{Rat(1), Rat(-2)});
  CHECK(primitive_unsigned(Coords{Rat(-2), Rat(4)}) == Coords{Rat(1), Rat(-2)});
  CHECK(lex_compare(Coords{Rat(-1), Rat(9)}, Coords{Rat(1), Rat(0)}) < 0);
}

TEST_CASE("linear solvers") {
  auto sol = solve_square({{Rat(2), Rat(0)}, {Rat(0), Rat(4)}}, {Rat(6), Rat(8)});
  REQUIRE(sol.has_value());
  CHECK((*sol)[0] == Rat(3));
  CHECK((*sol)[1] == Rat(2));
  CHECK_FALSE(solve_square({{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}, {Rat(1), Rat(1)}).has_value());

  auto n = orthogonal_complement_vector({{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}}, 3);
  REQUIRE(n.has_value());
  CHECK((*n)[0] == 0);
  CHECK((*n)[1] == 0);
  CHECK((*n)[2] != 0);
  CHECK_FALSE(orthogonal_complement_vector(
                  {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, 2)
                  .has_value());
}
