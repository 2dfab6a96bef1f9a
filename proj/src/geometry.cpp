#include "flagdepth/geometry.hpp"

#include <algorithm>
#include <utility>

namespace flagdepth {

namespace {

void require_same_dim(int a, int b, const char* what) {
  if (a != b) throw DimensionMismatch(std::string(what) + ": dimension mismatch");
}

// In-place fraction elimination to row echelon form; returns the rank and
// leaves `rows` reduced. Pivot columns are recorded when requested.
int eliminate(std::vector<Coords>& rows, std::vector<int>* pivot_cols = nullptr) {
  if (rows.empty()) return 0;
  const size_t cols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows.size(); ++c) {
    size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rat f = rows[i][c] / rows[r][c];
      for (size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
    }
    if (pivot_cols) pivot_cols->push_back(static_cast<int>(c));
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

Direction::Direction(Coords coords) : c(std::move(coords)) {
  if (is_zero(c)) throw std::invalid_argument("Direction: zero vector");
}

Direction::Direction(std::initializer_list<Rat> coords) : Direction(Coords(coords)) {}

FlagHalfspace::FlagHalfspace(Point center, std::vector<Direction> normals)
    : center_(std::move(center)), normals_(std::move(normals)) {
  const int d = center_.dim();
  if (static_cast<int>(normals_.size()) != d)
    throw std::invalid_argument("FlagHalfspace: need exactly dim normals");
  std::vector<Coords> rows;
  rows.reserve(normals_.size());
  for (const auto& n : normals_) {
    require_same_dim(n.dim(), d, "FlagHalfspace");
    rows.push_back(n.c);
  }
  if (rank(std::move(rows)) != d)
    throw std::invalid_argument("FlagHalfspace: normals not linearly independent");
}

Rat dot(const Coords& a, const Coords& b) {
  require_same_dim(static_cast<int>(a.size()), static_cast<int>(b.size()), "dot");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Coords sub(const Point& a, const Point& b) {
  require_same_dim(a.dim(), b.dim(), "sub");
  Coords r(a.c);
  for (size_t i = 0; i < r.size(); ++i) r[i] -= b.c[i];
  return r;
}

Coords add_scaled(const Coords& a, const Rat& t, const Coords& b) {
  require_same_dim(static_cast<int>(a.size()), static_cast<int>(b.size()), "add_scaled");
  Coords r(a);
  for (size_t i = 0; i < r.size(); ++i) r[i] += t * b[i];
  return r;
}

bool is_zero(const Coords& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

Coords primitive(const Coords& v) {
  Int lcm = 1;
  for (const Rat& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<Int> ints;
  ints.reserve(v.size());
  Int gcd = 0;
  for (const Rat& x : v) {
    Int i = x.get_num() * (lcm / x.get_den());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), i.get_mpz_t());
    ints.push_back(std::move(i));
  }
  Coords out(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    out[i] = gcd == 0 ? Rat(0) : Rat(ints[i] / gcd);
  return out;
}

Coords primitive_unsigned(const Coords& v) {
  Coords p = primitive(v);
  for (const Rat& x : p) {
    if (x > 0) break;
    if (x < 0) {
      for (Rat& y : p) y = -y;
      break;
    }
  }
  return p;
}

int lex_compare(const Coords& a, const Coords& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

Side side_of(const ClosedHalfspace& h, const Point& y) {
  require_same_dim(h.base.dim(), y.dim(), "side_of");
  int s = sgn(dot(sub(y, h.base), h.normal.c));
  if (s > 0) return Side::Inside;
  if (s < 0) return Side::Outside;
  return Side::Boundary;
}

bool flag_contains(const FlagHalfspace& f, const Point& y) {
  require_same_dim(f.center().dim(), y.dim(), "flag_contains");
  const Coords diff = sub(y, f.center());
  for (const Direction& u : f.normals()) {
    int s = sgn(dot(diff, u.c));
    if (s != 0) return s > 0;
  }
  return true;  // all signs zero: normals span, so y == center
}

FlagHalfspace flag_complement(const FlagHalfspace& f) {
  std::vector<Direction> neg;
  neg.reserve(f.normals().size());
  for (const Direction& u : f.normals()) {
    Coords c(u.c);
    for (Rat& x : c) x = -x;
    neg.emplace_back(std::move(c));
  }
  return FlagHalfspace(f.center(), std::move(neg));
}

int affine_dimension(std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("affine_dimension: empty point set");
  std::vector<Coords> diffs;
  diffs.reserve(points.size() - 1);
  for (size_t i = 1; i < points.size(); ++i) diffs.push_back(sub(points[i], points[0]));
  return rank(std::move(diffs));
}

int rank(std::vector<Coords> rows) { return eliminate(rows); }

std::optional<Coords> orthogonal_complement_vector(std::vector<Coords> rows, int dim) {
  std::vector<int> pivots;
  if (rows.empty()) {
    // whole space; pick the first axis
    Coords e(dim, Rat(0));
    e[0] = 1;
    return e;
  }
  int r = eliminate(rows, &pivots);
  if (r == dim) return std::nullopt;
  // first free column
  int free_col = 0;
  {
    std::vector<bool> is_pivot(dim, false);
    for (int p : pivots) is_pivot[p] = true;
    while (free_col < dim && is_pivot[free_col]) ++free_col;
  }
  Coords x(dim, Rat(0));
  x[free_col] = 1;
  for (int i = r - 1; i >= 0; --i) {
    int pc = pivots[i];
    Rat s = 0;
    for (int j = pc + 1; j < dim; ++j) s += rows[i][j] * x[j];
    x[pc] = -s / rows[i][pc];
  }
  return x;
}

std::optional<Coords> solve_square(std::vector<Coords> rows, Coords rhs) {
  const size_t n = rows.size();
  for (size_t i = 0; i < n; ++i) rows[i].push_back(rhs[i]);
  std::vector<int> pivots;
  int r = eliminate(rows, &pivots);
  if (r < static_cast<int>(n) || (r > 0 && pivots.back() == static_cast<int>(n)))
    return std::nullopt;
  Coords x(n, Rat(0));
  for (int i = static_cast<int>(n) - 1; i >= 0; --i) {
    int pc = pivots[i];
    Rat s = rows[i][n];
    for (size_t j = pc + 1; j < n; ++j) s -= rows[i][j] * x[j];
    x[pc] = s / rows[i][pc];
  }
  return x;
}

std::vector<int> independent_subset(const std::vector<Coords>& vecs) {
  std::vector<int> chosen;
  std::vector<Coords> basis;
  for (size_t i = 0; i < vecs.size(); ++i) {
    std::vector<Coords> trial = basis;
    trial.push_back(vecs[i]);
    if (rank(trial) > static_cast<int>(basis.size())) {
      basis.push_back(vecs[i]);
      chosen.push_back(static_cast<int>(i));
    }
  }
  return chosen;
}

}  // namespace flagdepth
