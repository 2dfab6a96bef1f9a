#include "flagdepth/depth.hpp"

#include "flagdepth/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace flagdepth {

namespace {

Coords negated(const Coords& v) {
  Coords r(v);
  for (Rat& x : r) x = -x;
  return r;
}

Coords perp2(const Coords& v) { return Coords{-v[1], v[0]}; }

// Lexicographic key of a flag witness: the concatenated primitive normals.
int witness_compare(const std::vector<Direction>& a, const std::vector<Direction>& b) {
  for (size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    int c = lex_compare(primitive(a[i].c), primitive(b[i].c));
    if (c != 0) return c;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Recursive exact depth.
//
// Depth decomposes over the boundary: for every hyperplane P through x,
// the best flag whose leading open halfspace has boundary P weighs
// mass_open(side) + depth(measure restricted to P). Minimising over the
// hyperplanes spanned by x and d-1 independent atom offsets (plus, when
// the offsets do not span, the hyperplane containing all atoms and one
// generic atom-free hyperplane) reaches the global minimum: every cell of
// the direction arrangement has such a hyperplane normal in its closure,
// and the boundary term is itself the minimal flag mass there.
// ---------------------------------------------------------------------------

// A measure restricted to a flat, in chart coordinates. Atom order is
// preserved so `root` keeps the indices into the original measure; those
// index sets key the memo table (the restricted depth only depends on the
// affine configuration of the on-flat atoms and x).
struct Sub {
  std::vector<Point> pts;
  std::vector<Rat> w;
  std::vector<int> root;

  Rat total() const {
    Rat t = 0;
    for (const Rat& x : w) t += x;
    return t;
  }
};

struct LevelChoice {
  Coords normal;     // unsigned canonical plane normal
  int side = +1;     // +1: open side of `normal`, -1: the opposite side
  Rat open_mass;     // atomic mass strictly on the chosen side
};

class DepthEngine {
 public:
  explicit DepthEngine(const AtomicMeasure& m) : m_(m) {}

  Sub root_sub(const Point& x) const {
    Sub s;
    s.pts = m_.atoms();
    s.w.assign(m_.size(), Rat(0));
    s.root.resize(m_.size());
    for (size_t i = 0; i < m_.size(); ++i) {
      s.w[i] = m_.weight(i);
      s.root[i] = static_cast<int>(i);
    }
    (void)x;
    return s;
  }

  Rat value(const Sub& s, const Point& x) {
    const int d = x.dim();
    if (d == 0) return s.total();
    if (d == 1) return value_1d(s, x);

    Rat at_x = 0;
    std::vector<Coords> diffs;
    std::vector<int> diff_idx;
    for (size_t i = 0; i < s.pts.size(); ++i) {
      Coords diff = sub(s.pts[i], x);
      if (is_zero(diff))
        at_x += s.w[i];
      else {
        diffs.push_back(std::move(diff));
        diff_idx.push_back(static_cast<int>(i));
      }
    }
    if (diffs.empty()) return at_x;

    Rat best;
    bool have = false;
    for (const Coords& n : candidate_normals(diffs, d)) {
      Rat v = plane_value(s, x, n, nullptr);
      if (!have || v < best) {
        best = v;
        have = true;
      }
    }
    return best;
  }

  // Witness pass along the winning path; uses the memoised value() for
  // subproblem scoring and rebuilds normals/trace only where needed.
  struct Wit {
    Rat value;
    std::vector<Direction> normals;  // in the current chart space
    std::vector<LevelChoice> levels;
  };

  Wit witness(const Sub& s, const Point& x) {
    const int d = x.dim();
    if (d == 0) return {s.total(), {}, {}};
    if (d == 1) return witness_1d(s, x);

    Rat at_x = 0;
    std::vector<Coords> diffs;
    for (size_t i = 0; i < s.pts.size(); ++i) {
      Coords diff = sub(s.pts[i], x);
      if (!is_zero(diff)) diffs.push_back(std::move(diff));
    }
    if (diffs.empty()) {
      // all atoms coincide with x: any flag works; use the axis flag
      Wit w;
      w.value = s.total();
      for (int k = 0; k < d; ++k) {
        Coords e(d, Rat(0));
        e[k] = 1;
        w.normals.emplace_back(std::move(e));
        w.levels.push_back({w.normals.back().c, +1, Rat(0)});
      }
      return w;
    }

    // score every candidate plane/side first, then expand only the ties
    Rat best;
    bool have = false;
    struct Cand {
      Coords normal;
      int side;
      Rat open_mass;
    };
    std::vector<Cand> cands;
    for (const Coords& n : candidate_normals(diffs, d)) {
      std::array<Rat, 2> side_mass;
      Rat v = plane_value(s, x, n, &side_mass);
      Rat plus = side_mass[0], minus = side_mass[1];
      Rat rdepth = v - std::min(plus, minus);
      for (int sd : {+1, -1}) {
        Rat cv = (sd > 0 ? plus : minus) + rdepth;
        if (!have || cv < best) {
          best = cv;
          have = true;
          cands.clear();
        }
        if (cv == best) cands.push_back({n, sd, sd > 0 ? plus : minus});
      }
    }

    Wit chosen;
    bool first = true;
    for (const Cand& c : cands) {
      Wit w = expand(s, x, c);
      if (first || witness_compare(w.normals, chosen.normals) < 0) {
        chosen = std::move(w);
        first = false;
      }
    }
    return chosen;
  }

 private:
  Rat value_1d(const Sub& s, const Point& x) {
    Rat at = 0, left = 0, right = 0;
    for (size_t i = 0; i < s.pts.size(); ++i) {
      int c = cmp(s.pts[i][0], x[0]);
      (c == 0 ? at : (c < 0 ? left : right)) += s.w[i];
    }
    return at + std::min(left, right);
  }

  Wit witness_1d(const Sub& s, const Point& x) {
    Rat at = 0, left = 0, right = 0;
    for (size_t i = 0; i < s.pts.size(); ++i) {
      int c = cmp(s.pts[i][0], x[0]);
      (c == 0 ? at : (c < 0 ? left : right)) += s.w[i];
    }
    // lighter open halfline; lex tie-break prefers the negative direction
    Coords u(1, Rat(right < left ? 1 : -1));
    Rat side_mass = std::min(left, right);
    Wit w;
    w.value = at + side_mass;
    w.normals.emplace_back(u);
    w.levels.push_back({u, +1, side_mass});
    return w;
  }

  // Candidate hyperplane normals through x given the nonzero atom offsets.
  std::vector<Coords> candidate_normals(const std::vector<Coords>& diffs, int d) {
    std::set<Coords> seen;
    std::vector<Coords> out;
    auto push = [&](Coords n) {
      Coords c = primitive_unsigned(n);
      if (seen.insert(c).second) out.push_back(std::move(c));
    };

    std::vector<int> indep = independent_subset(diffs);
    if (static_cast<int>(indep.size()) == d) {
      // all hyperplanes spanned by d-1 independent offsets
      std::vector<int> pick(d - 1);
      enumerate_subsets(diffs, pick, 0, 0, push);
    } else {
      // offsets span a proper subspace: one hyperplane holds every atom
      std::vector<Coords> rows;
      for (int i : indep) rows.push_back(diffs[i]);
      if (auto n = orthogonal_complement_vector(rows, d)) push(std::move(*n));
      // plus a generic hyperplane containing no atoms: moment-curve search
      for (long t = 1;; ++t) {
        Coords u(d);
        Rat p = 1;
        for (int k = 0; k < d; ++k) {
          u[k] = p;
          p *= t;
        }
        bool hits = std::any_of(diffs.begin(), diffs.end(),
                                [&](const Coords& df) { return dot(df, u) == 0; });
        if (!hits) {
          push(std::move(u));
          break;
        }
      }
    }
    return out;
  }

  template <typename Push>
  void enumerate_subsets(const std::vector<Coords>& diffs, std::vector<int>& pick, size_t k,
                         size_t from, Push& push) {
    if (k == pick.size()) {
      std::vector<Coords> rows;
      rows.reserve(pick.size());
      for (int i : pick) rows.push_back(diffs[i]);
      if (rank(rows) != static_cast<int>(pick.size())) return;
      if (auto n = orthogonal_complement_vector(std::move(rows),
                                                static_cast<int>(diffs[0].size())))
        push(std::move(*n));
      return;
    }
    for (size_t i = from; i < diffs.size(); ++i) {
      pick[k] = static_cast<int>(i);
      enumerate_subsets(diffs, pick, k + 1, i + 1, push);
    }
  }

  // min over both sides of open-side mass + restricted depth; optionally
  // reports the two open side masses (+ then -).
  Rat plane_value(const Sub& s, const Point& x, const Coords& n, std::array<Rat, 2>* sides) {
    Rat plus = 0, minus = 0;
    Sub child;
    for (size_t i = 0; i < s.pts.size(); ++i) {
      int c = sgn(dot(sub(s.pts[i], x), n));
      if (c > 0)
        plus += s.w[i];
      else if (c < 0)
        minus += s.w[i];
      else {
        child.pts.push_back(s.pts[i]);
        child.w.push_back(s.w[i]);
        child.root.push_back(s.root[i]);
      }
    }
    if (sides) (*sides)[0] = plus, (*sides)[1] = minus;
    return std::min(plus, minus) + restricted_value(s, x, n, std::move(child));
  }

  Rat restricted_value(const Sub& s, const Point& x, const Coords& n, Sub child) {
    std::vector<int> key(child.root);
    std::sort(key.begin(), key.end());
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    HyperplaneChart chart(Hyperplane{x, Direction(n)});
    Sub cc;
    cc.w = std::move(child.w);
    cc.root = std::move(child.root);
    cc.pts.reserve(child.pts.size());
    for (const Point& p : child.pts) cc.pts.push_back(chart.to_chart(p));
    Rat v = value(cc, chart.to_chart(x));
    memo_.emplace(std::move(key), v);
    return v;
  }

  Wit expand(const Sub& s, const Point& x, const auto& cand) {
    Coords lead = cand.side > 0 ? cand.normal : negated(cand.normal);
    Sub child;
    for (size_t i = 0; i < s.pts.size(); ++i) {
      if (sgn(dot(sub(s.pts[i], x), cand.normal)) != 0) continue;
      child.pts.push_back(s.pts[i]);
      child.w.push_back(s.w[i]);
      child.root.push_back(s.root[i]);
    }
    HyperplaneChart chart(Hyperplane{x, Direction(cand.normal)});
    Sub cc;
    cc.w = std::move(child.w);
    cc.root = std::move(child.root);
    for (const Point& p : child.pts) cc.pts.push_back(chart.to_chart(p));
    Wit sub_wit = witness(cc, chart.to_chart(x));

    Wit w;
    w.value = cand.open_mass + sub_wit.value;
    w.normals.emplace_back(lead);
    for (const Direction& nd : sub_wit.normals) w.normals.push_back(chart.lift(nd));
    w.levels.push_back({lead, +1, cand.open_mass});
    for (const LevelChoice& lc : sub_wit.levels)
      w.levels.push_back({chart.lift(Direction(lc.normal)).c, lc.side, lc.open_mass});
    return w;
  }

  const AtomicMeasure& m_;
  std::map<std::vector<int>, Rat> memo_;
};

DepthResult result_from_wit(const Point& x, DepthEngine::Wit w) {
  std::vector<Direction> normals;
  normals.reserve(w.normals.size());
  for (auto& n : w.normals) normals.emplace_back(primitive(n.c));
  DepthResult r{MassValue::of(w.value), FlagHalfspace(x, std::move(normals)), {}, true};
  r.trace.reserve(w.levels.size());
  for (auto& lc : w.levels)
    r.trace.push_back(TraceStep{Hyperplane{x, Direction(lc.normal)}, lc.side, lc.open_mass});
  return r;
}

void check_measure_dim(const AtomicMeasure& m, const Point& x) {
  if (m.size() > 0 && m.dim() != x.dim()) throw DimensionMismatch("depth: point vs measure");
}

}  // namespace

DepthResult depth_1d(const AtomicMeasure& m, const Point& x) {
  if (x.dim() != 1) throw DimensionMismatch("depth_1d: d=1 required");
  check_measure_dim(m, x);
  DepthEngine eng(m);
  return result_from_wit(x, eng.witness(eng.root_sub(x), x));
}

DepthResult exact_depth(const AtomicMeasure& m, const Point& x) {
  if (x.dim() < 1) throw std::invalid_argument("exact_depth: d >= 1 required");
  check_measure_dim(m, x);
  DepthEngine eng(m);
  return result_from_wit(x, eng.witness(eng.root_sub(x), x));
}

FlagHalfspace minimizing_flag(const AtomicMeasure& m, const Point& x) {
  return exact_depth(m, x).witness;
}

// ---------------------------------------------------------------------------
// 2-D angular sweep.
// ---------------------------------------------------------------------------

namespace {

// CCW angular order starting at direction (1, 0).
bool angle_less(const Coords& a, const Coords& b) {
  auto half = [](const Coords& u) { return (u[1] > 0 || (u[1] == 0 && u[0] > 0)) ? 0 : 1; };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return a[0] * b[1] - a[1] * b[0] > 0;
}

struct SweepCandidate {
  Coords lead;
  Coords line;  // second normal (halfline choice)
  Rat mass;
};

}  // namespace

DepthResult depth_sweep_2d(const AtomicMeasure& m, const Point& x) {
  if (x.dim() != 2) throw DimensionMismatch("depth_sweep_2d: d=2 required");
  check_measure_dim(m, x);

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

  auto strict_mass = [&](const Coords& u) {
    Rat s = 0;
    for (size_t i = 0; i < diffs.size(); ++i)
      if (dot(diffs[i], u) > 0) s += wts[i];
    return s;
  };
  auto line_mass = [&](const Coords& u, const Coords& halfline) {
    Rat s = 0;
    for (size_t i = 0; i < diffs.size(); ++i)
      if (dot(diffs[i], u) == 0 && dot(diffs[i], halfline) > 0) s += wts[i];
    return s;
  };

  std::vector<SweepCandidate> cands;
  Rat min_closed;
  bool have_closed = false;
  auto note_closed = [&](const Rat& v) {
    if (!have_closed || v < min_closed) {
      min_closed = v;
      have_closed = true;
    }
  };

  if (diffs.empty()) {
    cands.push_back({Coords{Rat(1), Rat(0)}, Coords{Rat(0), Rat(1)}, at_x});
    note_closed(at_x);
  } else {
    std::set<Coords> dir_set;
    for (const Coords& diff : diffs) {
      Coords p = primitive(perp2(diff));
      dir_set.insert(p);
      dir_set.insert(negated(p));
    }
    std::vector<Coords> dirs(dir_set.begin(), dir_set.end());
    std::sort(dirs.begin(), dirs.end(), angle_less);

    for (const Coords& u : dirs) {
      // critical direction: both halfline flags
      Rat strict = strict_mass(u);
      Coords w1 = perp2(u);
      for (const Coords& hl : {w1, negated(w1)})
        cands.push_back({u, primitive(hl), strict + at_x + line_mass(u, hl)});
      Rat boundary = 0;
      for (size_t i = 0; i < diffs.size(); ++i)
        if (dot(diffs[i], u) == 0) boundary += wts[i];
      note_closed(strict + boundary + at_x);
    }
    for (size_t i = 0; i < dirs.size(); ++i) {
      const Coords& a = dirs[i];
      const Coords& b = dirs[(i + 1) % dirs.size()];
      Coords rep = add_scaled(a, Rat(1), b);
      if (is_zero(rep)) rep = perp2(a);  // exactly opposite: bisect with the ccw perp
      rep = primitive(rep);
      Rat closed = strict_mass(rep) + at_x;  // rep line holds no atoms besides x
      note_closed(closed);
      Coords hl = primitive(perp2(rep));
      Coords hl2 = negated(hl);
      cands.push_back({rep, lex_compare(hl, hl2) <= 0 ? hl : hl2, closed});
    }
  }

  const SweepCandidate* best = &cands[0];
  for (const SweepCandidate& c : cands) {
    int vc = cmp(c.mass, best->mass);
    if (vc < 0 ||
        (vc == 0 && (lex_compare(c.lead, best->lead) < 0 ||
                     (lex_compare(c.lead, best->lead) == 0 && lex_compare(c.line, best->line) < 0))))
      best = &c;
  }
  if (best->mass != min_closed)
    throw std::logic_error("depth_sweep_2d: flag minimum disagrees with closed minimum");

  DepthResult r{MassValue::of(best->mass),
                FlagHalfspace(x, {Direction(best->lead), Direction(best->line)}),
                {},
                true};
  r.trace.push_back(TraceStep{Hyperplane{x, Direction(best->lead)}, +1, strict_mass(best->lead)});
  r.trace.push_back(TraceStep{Hyperplane{x, Direction(best->line)}, +1,
                              line_mass(best->lead, best->line)});
  return r;
}

// ---------------------------------------------------------------------------
// Sampled upper bound.
// ---------------------------------------------------------------------------

namespace {

Coords random_direction(SplitMix64& rng, int d) {
  for (;;) {
    Coords u(d);
    bool nonzero = false;
    for (int k = 0; k < d; ++k) {
      long v = rng.i32();
      u[k] = Rat(v);
      nonzero = nonzero || v != 0;
    }
    if (nonzero) return u;
  }
}

}  // namespace

MassValue sampled_depth_upper_bound(const AtomicMeasure& m, const Point& x, int n_dirs,
                                    std::uint64_t seed) {
  if (n_dirs < 1) throw std::invalid_argument("sampled_depth_upper_bound: n_dirs >= 1");
  check_measure_dim(m, x);
  const int d = x.dim();
  SplitMix64 rng(seed);

  // Exact integer fast path: scale every coordinate by the common
  // denominator; direction components are 32-bit, so dot products fit
  // comfortably in 128 bits whenever the scaled coordinates fit in 64.
  Int lcm = 1;
  for (const Rat& c : x.c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  for (size_t i = 0; i < m.size(); ++i)
    for (const Rat& c : m.atom(i).c)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());

  bool fits = lcm.fits_slong_p() && d <= 4;
  std::vector<std::array<std::int64_t, 4>> scaled;
  std::array<std::int64_t, 4> sx{};
  if (fits) {
    auto scale = [&](const Point& p, std::array<std::int64_t, 4>& out) {
      for (int k = 0; k < d; ++k) {
        Int v = p[k].get_num() * (lcm / p[k].get_den());
        if (!v.fits_slong_p() || std::llabs(v.get_si()) > (1LL << 40)) return false;
        out[k] = v.get_si();
      }
      return true;
    };
    fits = scale(x, sx);
    scaled.resize(m.size());
    for (size_t i = 0; fits && i < m.size(); ++i) fits = scale(m.atom(i), scaled[i]);
  }

  Rat best;
  bool have = false;
  for (int t = 0; t < n_dirs; ++t) {
    Coords u = random_direction(rng, d);
    Rat mass = 0;
    if (fits) {
      std::array<std::int64_t, 4> iu{};
      for (int k = 0; k < d; ++k) iu[k] = static_cast<std::int64_t>(u[k].get_num().get_si());
      __int128 px = 0;
      for (int k = 0; k < d; ++k) px += static_cast<__int128>(iu[k]) * sx[k];
      for (size_t i = 0; i < m.size(); ++i) {
        __int128 pa = 0;
        for (int k = 0; k < d; ++k) pa += static_cast<__int128>(iu[k]) * scaled[i][k];
        if (pa >= px) mass += m.weight(i);
      }
    } else {
      ClosedHalfspace h{x, Direction(u)};
      mass = *mass_closed(m, h).exact;
    }
    if (!have || mass < best) {
      best = mass;
      have = true;
    }
  }
  return MassValue::of(best);
}

MassValue sampled_depth_upper_bound(const DiskMixtureMeasure& m, const Point& x, int n_dirs,
                                    std::uint64_t seed) {
  if (n_dirs < 1) throw std::invalid_argument("sampled_depth_upper_bound: n_dirs >= 1");
  if (x.dim() != 2) throw DimensionMismatch("sampled_depth_upper_bound: mixture is planar");
  SplitMix64 rng(seed);
  double best = std::numeric_limits<double>::infinity();
  for (int t = 0; t < n_dirs; ++t) {
    ClosedHalfspace h{x, Direction(random_direction(rng, 2))};
    best = std::min(best, mass_closed(m, h).approx);
  }
  return MassValue::real(best);
}

// ---------------------------------------------------------------------------
// Disk mixture depth.
// ---------------------------------------------------------------------------

namespace {

struct MixCandidate {
  Coords lead;
  Coords line;
  double mass;
  Rat other_halfline;  // atomic mass of the rejected halfline
  Rat strict_atomic;
};

// st strictly inside the CCW arc from a to b (arcs never exceed pi
// because every direction enters the list with its negation).
bool inside_arc(const Coords& a, const Coords& b, const Coords& st) {
  auto cross = [](const Coords& u, const Coords& v) { return u[0] * v[1] - u[1] * v[0]; };
  if (negated(a) == b) return cross(a, st) > 0;
  return cross(a, st) > 0 && cross(st, b) > 0;
}

}  // namespace

DepthResult mixture_depth_2d(const DiskMixtureMeasure& m, const Point& x) {
  if (x.dim() != 2) throw DimensionMismatch("mixture_depth_2d: d=2 required");
  AtomicMeasure atoms = m.atomic_part();
  if (atoms.size() > 0 && atoms.dim() != 2) throw DimensionMismatch("mixture_depth_2d");

  Rat at_x = 0;
  std::vector<Coords> diffs;
  std::vector<Rat> wts;
  for (size_t i = 0; i < atoms.size(); ++i) {
    Coords diff = sub(atoms.atom(i), x);
    if (is_zero(diff))
      at_x += atoms.weight(i);
    else {
      diffs.push_back(std::move(diff));
      wts.push_back(atoms.weight(i));
    }
  }

  auto strict_mass = [&](const Coords& u) {
    Rat s = 0;
    for (size_t i = 0; i < diffs.size(); ++i)
      if (dot(diffs[i], u) > 0) s += wts[i];
    return s;
  };
  auto line_mass = [&](const Coords& u, const Coords& halfline) {
    Rat s = 0;
    for (size_t i = 0; i < diffs.size(); ++i)
      if (dot(diffs[i], u) == 0 && dot(diffs[i], halfline) > 0) s += wts[i];
    return s;
  };
  auto disk = [&](const Coords& u) {
    return disk_halfplane_mass(m, ClosedHalfspace{x, Direction(u)});
  };

  std::vector<MixCandidate> cands;
  auto add_atom_free = [&](Coords u) {
    u = primitive(u);
    Coords hl = primitive(perp2(u));
    Coords hl2 = negated(hl);
    Rat strict = strict_mass(u);
    cands.push_back({u, lex_compare(hl, hl2) <= 0 ? hl : hl2,
                     disk(u) + rat_double(strict + at_x), Rat(0), strict});
  };

  if (diffs.empty()) {
    Coords st = sub(x, m.disk_center);
    if (!is_zero(st))
      add_atom_free(st);
    else
      add_atom_free(Coords{Rat(1), Rat(0)});
  } else {
    std::set<Coords> dir_set;
    for (const Coords& diff : diffs) {
      Coords p = primitive(perp2(diff));
      dir_set.insert(p);
      dir_set.insert(negated(p));
    }
    std::vector<Coords> dirs(dir_set.begin(), dir_set.end());
    std::sort(dirs.begin(), dirs.end(), angle_less);

    for (const Coords& u : dirs) {
      double base = disk(u) + rat_double(strict_mass(u) + at_x);
      Coords w1 = perp2(u);
      for (const Coords& hl : {w1, negated(w1)}) {
        Coords h = primitive(hl);
        cands.push_back({u, h, base + rat_double(line_mass(u, h)), line_mass(u, negated(h)),
                         strict_mass(u)});
      }
    }
    Coords st = sub(x, m.disk_center);
    for (size_t i = 0; i < dirs.size(); ++i) {
      const Coords& a = dirs[i];
      const Coords& b = dirs[(i + 1) % dirs.size()];
      // cell representative: keeps the attained test sound when the disk
      // mass is flat across the cell (x at the disk centre)
      Coords rep = add_scaled(a, Rat(1), b);
      if (is_zero(rep)) rep = perp2(a);
      add_atom_free(rep);
      // interior stationary direction of the smooth disk mass
      if (!is_zero(st) && inside_arc(a, b, st)) add_atom_free(st);
    }
  }

  const double tol = 1e-12;
  double best = std::numeric_limits<double>::infinity();
  for (const MixCandidate& c : cands) best = std::min(best, c.mass);

  const MixCandidate* pick = nullptr;
  bool attained = false;
  for (const MixCandidate& c : cands) {
    if (c.mass > best + tol) continue;
    if (c.other_halfline == 0) attained = true;
    if (!pick || lex_compare(c.lead, pick->lead) < 0 ||
        (lex_compare(c.lead, pick->lead) == 0 && lex_compare(c.line, pick->line) < 0))
      pick = &c;
  }

  DepthResult r{MassValue::real(best),
                FlagHalfspace(x, {Direction(pick->lead), Direction(pick->line)}),
                {},
                attained};
  r.trace.push_back(TraceStep{Hyperplane{x, Direction(pick->lead)}, +1, pick->strict_atomic});
  r.trace.push_back(
      TraceStep{Hyperplane{x, Direction(pick->line)}, +1, line_mass(pick->lead, pick->line)});
  return r;
}

}  // namespace flagdepth
