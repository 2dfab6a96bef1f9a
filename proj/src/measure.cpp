#include "flagdepth/measure.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace flagdepth {

AtomicMeasure::AtomicMeasure(std::vector<Point> atoms, std::vector<Rat> weights) {
  if (atoms.size() != weights.size())
    throw std::invalid_argument("AtomicMeasure: atoms/weights length mismatch");
  dim_ = atoms.empty() ? 0 : atoms[0].dim();
  // merge duplicate coordinates, drop zero weights
  std::map<Coords, Rat> merged;
  for (size_t i = 0; i < atoms.size(); ++i) {
    if (atoms[i].dim() != dim_) throw DimensionMismatch("AtomicMeasure: mixed dimensions");
    if (weights[i] < 0) throw std::invalid_argument("AtomicMeasure: negative weight");
    if (weights[i] == 0) continue;
    merged[atoms[i].c] += weights[i];
  }
  total_ = 0;
  atoms_.reserve(merged.size());
  weights_.reserve(merged.size());
  for (auto& [coords, w] : merged) {
    atoms_.emplace_back(coords);
    weights_.push_back(w);
    total_ += w;
  }
}

AtomicMeasure AtomicMeasure::empirical(std::vector<Point> atoms) {
  if (atoms.empty()) throw std::invalid_argument("empirical: no atoms");
  Rat w(1, static_cast<unsigned long>(atoms.size()));
  std::vector<Rat> weights(atoms.size(), w);
  return AtomicMeasure(std::move(atoms), std::move(weights));
}

Rat AtomicMeasure::weight_at(const Point& x) const {
  for (size_t i = 0; i < atoms_.size(); ++i)
    if (atoms_[i] == x) return weights_[i];
  return Rat(0);
}

Rat DiskMixtureMeasure::total_atomic_mass() const {
  Rat t = 0;
  for (const Rat& w : weights) t += w;
  return t;
}

namespace {

Rat atomic_mass_where(const AtomicMeasure& m, const ClosedHalfspace& h, bool include_boundary) {
  Rat s = 0;
  for (size_t i = 0; i < m.size(); ++i) {
    Side side = side_of(h, m.atom(i));
    if (side == Side::Inside || (include_boundary && side == Side::Boundary)) s += m.weight(i);
  }
  return s;
}

}  // namespace

MassValue mass_closed(const AtomicMeasure& m, const ClosedHalfspace& h) {
  return MassValue::of(atomic_mass_where(m, h, true));
}

MassValue mass_open(const AtomicMeasure& m, const ClosedHalfspace& h) {
  return MassValue::of(atomic_mass_where(m, h, false));
}

MassValue mass_flag(const AtomicMeasure& m, const FlagHalfspace& f) {
  Rat s = 0;
  for (size_t i = 0; i < m.size(); ++i)
    if (flag_contains(f, m.atom(i))) s += m.weight(i);
  return MassValue::of(s);
}

double disk_halfplane_mass(const DiskMixtureMeasure& m, const ClosedHalfspace& h) {
  if (h.base.dim() != 2) throw DimensionMismatch("disk_halfplane_mass: d=2 only");
  const double r = rat_double(m.disk_radius);
  const Coords off = sub(h.base, m.disk_center);
  const double num = rat_double(dot(off, h.normal.c));
  const double len = std::sqrt(rat_double(dot(h.normal.c, h.normal.c)));
  const double delta = num / len;
  double area;
  if (delta <= -r)
    area = M_PI * r * r;
  else if (delta >= r)
    area = 0.0;
  else
    area = r * r * std::acos(delta / r) - delta * std::sqrt(r * r - delta * delta);
  return rat_double(m.disk_weight) * area / (M_PI * r * r);
}

MassValue mass_closed(const DiskMixtureMeasure& m, const ClosedHalfspace& h) {
  Rat atomic = atomic_mass_where(m.atomic_part(), h, true);
  return MassValue::real(disk_halfplane_mass(m, h) + rat_double(atomic));
}

MassValue mass_open(const DiskMixtureMeasure& m, const ClosedHalfspace& h) {
  Rat atomic = atomic_mass_where(m.atomic_part(), h, false);
  return MassValue::real(disk_halfplane_mass(m, h) + rat_double(atomic));
}

MassValue mass_flag(const DiskMixtureMeasure& m, const FlagHalfspace& f) {
  if (f.center().dim() != 2) throw DimensionMismatch("mass_flag: mixture is planar");
  // only the leading open halfspace carries continuous mass
  double disk = disk_halfplane_mass(m, ClosedHalfspace{f.center(), f.normals()[0]});
  Rat atomic = 0;
  AtomicMeasure ap = m.atomic_part();
  for (size_t i = 0; i < ap.size(); ++i)
    if (flag_contains(f, ap.atom(i))) atomic += ap.weight(i);
  return MassValue::real(disk + rat_double(atomic));
}

HyperplaneChart::HyperplaneChart(const Hyperplane& p) : origin_(p.base), normal_(p.normal.c) {
  const int d = origin_.dim();
  pivot_ = 0;
  while (pivot_ < d && normal_[pivot_] == 0) ++pivot_;
  if (pivot_ == d) throw std::invalid_argument("HyperplaneChart: zero normal");
  // basis vectors e_i - (v_i / v_p) e_p for i != p span the complement exactly
  basis_.reserve(d - 1);
  for (int i = 0; i < d; ++i) {
    if (i == pivot_) continue;
    Coords b(d, Rat(0));
    b[i] = 1;
    b[pivot_] = -normal_[i] / normal_[pivot_];
    basis_.push_back(std::move(b));
  }
}

Point HyperplaneChart::to_chart(const Point& y) const {
  // offsets with the pivot coordinate dropped; exact because y - origin
  // is orthogonal to the normal
  Coords diff = sub(y, origin_);
  Coords out;
  out.reserve(chart_dim());
  for (int i = 0; i < ambient_dim(); ++i)
    if (i != pivot_) out.push_back(diff[i]);
  return Point(std::move(out));
}

Point HyperplaneChart::to_ambient(const Point& chart_point) const {
  Coords out(origin_.c);
  for (int k = 0; k < chart_dim(); ++k)
    out = add_scaled(out, chart_point[k], basis_[k]);
  return Point(std::move(out));
}

Direction HyperplaneChart::lift(const Direction& chart_dir) const {
  Coords out(ambient_dim(), Rat(0));
  int k = 0;
  for (int i = 0; i < ambient_dim(); ++i) {
    if (i == pivot_) continue;
    out[i] = chart_dir[k++];
  }
  return Direction(std::move(out));
}

std::pair<AtomicMeasure, HyperplaneChart> restrict_to_hyperplane(const AtomicMeasure& m,
                                                                 const Hyperplane& p) {
  if (m.dim() != p.base.dim()) throw DimensionMismatch("restrict_to_hyperplane");
  HyperplaneChart chart(p);
  std::vector<Point> atoms;
  std::vector<Rat> weights;
  for (size_t i = 0; i < m.size(); ++i) {
    if (dot(sub(m.atom(i), p.base), p.normal.c) != 0) continue;
    atoms.push_back(chart.to_chart(m.atom(i)));
    weights.push_back(m.weight(i));
  }
  return {AtomicMeasure(std::move(atoms), std::move(weights)), std::move(chart)};
}

}  // namespace flagdepth
