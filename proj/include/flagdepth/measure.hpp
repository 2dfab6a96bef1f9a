#pragma once

#include "flagdepth/geometry.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace flagdepth {

// Mass of a set under a measure. Atomic measures always carry the exact
// rational; disk mixtures only the floating approximation (absolute error
// stays below 1e-12 for unit-scale disks).
struct MassValue {
  std::optional<Rat> exact;
  double approx = 0.0;

  static MassValue of(Rat r) {
    MassValue m;
    m.approx = rat_double(r);
    m.exact = std::move(r);
    return m;
  }
  static MassValue real(double v) {
    MassValue m;
    m.approx = v;
    return m;
  }
};

// Finite measure with atomic support. Duplicate coordinates are merged on
// construction and zero weights dropped, so stored atoms are distinct and
// strictly positive. May be empty (mass 0); restrictions produce those.
class AtomicMeasure {
 public:
  AtomicMeasure(std::vector<Point> atoms, std::vector<Rat> weights);

  // Equal weights 1/n: the empirical measure of a dataset.
  static AtomicMeasure empirical(std::vector<Point> atoms);

  int dim() const { return dim_; }
  size_t size() const { return atoms_.size(); }
  const std::vector<Point>& atoms() const { return atoms_; }
  const Point& atom(size_t i) const { return atoms_[i]; }
  const Rat& weight(size_t i) const { return weights_[i]; }
  const Rat& total_mass() const { return total_; }
  // Weight of the atom at exactly this location (0 when none).
  Rat weight_at(const Point& x) const;

 private:
  std::vector<Point> atoms_;
  std::vector<Rat> weights_;
  Rat total_;
  int dim_ = 0;
};

// Uniform mass on a closed disk plus finitely many atoms, in the plane.
// The continuous part is smooth: every line carries zero disk mass.
struct DiskMixtureMeasure {
  Point disk_center;          // d = 2
  Rat disk_radius;            // > 0
  Rat disk_weight;            // > 0
  std::vector<Point> atoms;   // may be empty
  std::vector<Rat> weights;

  AtomicMeasure atomic_part() const { return AtomicMeasure(atoms, weights); }
  Rat total_atomic_mass() const;
  double total_mass() const { return rat_double(disk_weight + total_atomic_mass()); }
};

MassValue mass_closed(const AtomicMeasure& m, const ClosedHalfspace& h);
MassValue mass_open(const AtomicMeasure& m, const ClosedHalfspace& h);
MassValue mass_flag(const AtomicMeasure& m, const FlagHalfspace& f);

MassValue mass_closed(const DiskMixtureMeasure& m, const ClosedHalfspace& h);
MassValue mass_open(const DiskMixtureMeasure& m, const ClosedHalfspace& h);
MassValue mass_flag(const DiskMixtureMeasure& m, const FlagHalfspace& f);

// Disk mass of the closed halfplane, as a fraction of the total disk
// weight already applied. Shared with the mixture depth scan.
double disk_halfplane_mass(const DiskMixtureMeasure& m, const ClosedHalfspace& h);

// Rational affine chart of a hyperplane: origin plus an exact
// (non-orthonormal) basis of the normal's orthogonal complement. Chart
// coordinates of an on-plane point are its offset coordinates with the
// pivot coordinate dropped; see to_chart.
class HyperplaneChart {
 public:
  HyperplaneChart(const Hyperplane& p);

  int ambient_dim() const { return static_cast<int>(origin_.dim()); }
  int chart_dim() const { return ambient_dim() - 1; }
  const Point& origin() const { return origin_; }
  const std::vector<Coords>& basis() const { return basis_; }
  int pivot() const { return pivot_; }

  // Requires y on the hyperplane.
  Point to_chart(const Point& y) const;
  Point to_ambient(const Point& chart_point) const;
  // Ambient direction inducing the same sign pattern on the hyperplane
  // as the given chart direction (zero inserted at the pivot slot).
  Direction lift(const Direction& chart_dir) const;

 private:
  Point origin_;
  Coords normal_;
  std::vector<Coords> basis_;
  int pivot_;
};

// Keeps exactly the atoms with zero signed offset against the plane,
// re-expressed in the chart. d = 1 yields a 0-dimensional measure.
std::pair<AtomicMeasure, HyperplaneChart> restrict_to_hyperplane(const AtomicMeasure& m,
                                                                 const Hyperplane& p);

}  // namespace flagdepth
