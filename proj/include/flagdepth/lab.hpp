#pragma once

#include "flagdepth/region.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace flagdepth {

struct GeneralPositionReport {
  bool in_general_position = true;
  std::optional<std::vector<int>> violating_subset;
  bool three_line_ok = true;
  std::optional<std::array<int, 6>> violating_sextuple;

  bool ok() const { return in_general_position && three_line_ok; }
};

// Exact test of both sample-position conditions: no k-subset in a
// (k-2)-dimensional affine flat for k = 2..d+1, and no three pair-lines
// with a common point (d >= 2, n >= 6).
GeneralPositionReport check_general_position(std::span<const Point> points);

// Deterministic standard Gaussian sample, rationalized at 1e-12 and
// resampled until it passes check_general_position.
std::vector<Point> sample_points(int n, int d, std::uint64_t seed);

struct CensusReport {
  int n = 0, d = 0, trials = 0;
  std::uint64_t seed = 0;
  std::map<int, int> dim_histogram;
  std::map<std::string, int> classification_histogram;
  // trials whose first draw failed general position (resampled, not skipped)
  std::vector<int> gp_resampled_trials;
  struct TheoremViolation {
    int trial;
    int dimension;
    std::string classification;
    std::string note;
  };
  std::vector<TheoremViolation> theorem_violations;
};

// Samples `trials` general-position datasets (per-trial seed = seed xor
// trial index), computes every median, and tallies dimensions and
// classifications. Dimension d-1 with n != d, and non-atom single-point
// medians in the plane with n not in {4, d}, are recorded as theorem
// violations rather than aborting the run.
CensusReport dimension_census(int n, int d, int trials, std::uint64_t seed);

struct ExampleCheck {
  std::string what;
  bool passed;
  std::string detail;
};

struct ExampleReport {
  std::string id;
  bool passed = true;
  std::vector<ExampleCheck> checks;
};

// ids: ex2.1, ex3.2-k0, ex3.2-k1, ex3.2-k3, ex4.2
ExampleReport reproduce_example(const std::string& id);
std::vector<std::string> example_ids();

// Frozen fixtures backing the reproducible examples.
DiskMixtureMeasure fixture_ex21();
AtomicMeasure fixture_ex32_k0();
AtomicMeasure fixture_ex32_k1();
AtomicMeasure fixture_ex32_k3();
AtomicMeasure fixture_ex42();

namespace detail {
std::vector<std::string> describe_position_defects(const AtomicMeasure& m);
}

}  // namespace flagdepth
