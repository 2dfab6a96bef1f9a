#pragma once

#include "flagdepth/rational.hpp"

#include <optional>
#include <span>
#include <vector>

namespace flagdepth {

using Coords = std::vector<Rat>;

struct Point {
  Coords c;

  Point() = default;
  explicit Point(Coords coords) : c(std::move(coords)) {}
  Point(std::initializer_list<Rat> coords) : c(coords) {}

  int dim() const { return static_cast<int>(c.size()); }
  const Rat& operator[](size_t i) const { return c[i]; }
  Rat& operator[](size_t i) { return c[i]; }
  bool operator==(const Point& o) const { return c == o.c; }
};

// A direction is a nonzero vector identified up to positive scaling; no
// normalization ever happens (unit vectors would force square roots out
// of the rationals), so every predicate must be homogeneous in it.
struct Direction {
  Coords c;

  Direction() = default;
  explicit Direction(Coords coords);
  Direction(std::initializer_list<Rat> coords);

  int dim() const { return static_cast<int>(c.size()); }
  const Rat& operator[](size_t i) const { return c[i]; }
  bool operator==(const Direction& o) const { return c == o.c; }
};

// {y : <y - base, normal> >= 0}; base lies on the boundary.
struct ClosedHalfspace {
  Point base;
  Direction normal;
};

// {y : <y - base, normal> = 0}
struct Hyperplane {
  Point base;
  Direction normal;
};

enum class Side { Inside, Boundary, Outside };

// The set {x} u G_d u ... u G_1: G_d is the open halfspace with inner
// normal normals[0], and each further G_k is the relatively open
// halfspace cut inside the previous boundary by the next normal.
// Membership reduces to the lexicographic sign rule, see flag_contains.
class FlagHalfspace {
 public:
  // Validates that the normals match the ambient dimension, has exactly
  // dim() of them, and are linearly independent.
  FlagHalfspace(Point center, std::vector<Direction> normals);

  const Point& center() const { return center_; }
  // Outermost first: normals()[0] is the normal of the open halfspace G_d.
  const std::vector<Direction>& normals() const { return normals_; }

 private:
  Point center_;
  std::vector<Direction> normals_;
};

Rat dot(const Coords& a, const Coords& b);
Coords sub(const Point& a, const Point& b);
Coords add_scaled(const Coords& a, const Rat& t, const Coords& b);
bool is_zero(const Coords& v);

// Clears denominators and divides by the gcd, preserving orientation.
// The canonical representative of a direction up to positive scaling.
Coords primitive(const Coords& v);
// As above but additionally flips sign so the first nonzero entry is
// positive; canonical for an *undirected* line/hyperplane normal.
Coords primitive_unsigned(const Coords& v);

// Lexicographic three-way compare of coordinate vectors (shorter first).
int lex_compare(const Coords& a, const Coords& b);

Side side_of(const ClosedHalfspace& h, const Point& y);
bool flag_contains(const FlagHalfspace& f, const Point& y);
FlagHalfspace flag_complement(const FlagHalfspace& f);

// Dimension of the affine hull of the given points.
int affine_dimension(std::span<const Point> points);

// Rank of the span of the given vectors (destroys nothing; copies).
int rank(std::vector<Coords> rows);

// A nonzero vector orthogonal to every row, or nullopt when the rows
// span the whole space. `dim` is the ambient dimension.
std::optional<Coords> orthogonal_complement_vector(std::vector<Coords> rows, int dim);

// Solves the square system rows * x = rhs exactly; nullopt if singular.
std::optional<Coords> solve_square(std::vector<Coords> rows, Coords rhs);

// Greedy maximal linearly independent subset; returns indices into vecs.
std::vector<int> independent_subset(const std::vector<Coords>& vecs);

}  // namespace flagdepth
