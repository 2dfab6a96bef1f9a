#pragma once

#include "flagdepth/lab.hpp"

#include <json.hpp>

#include <string>

namespace flagdepth {

// JSON builders for the command surface; schemas ship under schemas/.
nlohmann::json rational_json(const Rat& q);
nlohmann::json point_json(const Point& p);
nlohmann::json depth_report(const AtomicMeasure& m, const Point& x, const DepthResult& r);
nlohmann::json median_report(const MedianResult& r);
nlohmann::json region_report(const DepthRegion& r);
nlohmann::json census_report(const CensusReport& r);
nlohmann::json example_report(const ExampleReport& r);

std::string example_report_text(const ExampleReport& r);

}  // namespace flagdepth
