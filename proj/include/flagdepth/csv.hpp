#pragma once

#include "flagdepth/measure.hpp"

#include <string>
#include <string_view>

namespace flagdepth {

// Dataset CSV: one point per row, d columns of decimal or "p/q" literals.
// An optional header names the columns; a column named "w" carries
// weights. Without a weight column every row gets mass 1/n (the empirical
// measure). '#' lines are comments.
AtomicMeasure parse_dataset_csv(std::string_view text);

// Writes "p/q" literals and an explicit w column; parsing the output
// reproduces the measure bit-identically.
std::string write_dataset_csv(const AtomicMeasure& m);

// "1/10,1/10,0" -> Point
Point parse_point(std::string_view text);

}  // namespace flagdepth
