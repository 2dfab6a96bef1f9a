#include "flagdepth/report.hpp"

#include <sstream>

namespace flagdepth {

using nlohmann::json;

json rational_json(const Rat& q) {
  return json{{"str", rat_str(q)}, {"decimal", rat_double(q)}};
}

json point_json(const Point& p) {
  json arr = json::array();
  for (const Rat& c : p.c) arr.push_back(rat_str(c));
  return arr;
}

namespace {

json direction_json(const Direction& d) {
  json arr = json::array();
  for (const Rat& c : d.c) arr.push_back(rat_str(c));
  return arr;
}

json flag_json(const FlagHalfspace& f) {
  json normals = json::array();
  for (const Direction& n : f.normals()) normals.push_back(direction_json(n));
  return json{{"center", point_json(f.center())}, {"normals", normals}};
}

json polytope_json(const ConvexPolytope& p) {
  json verts = json::array();
  for (const Point& v : p.vertices) verts.push_back(point_json(v));
  return json{{"vertices", verts},
              {"ambient_dim", p.ambient_dim},
              {"intrinsic_dim", p.intrinsic_dim},
              {"empty", p.empty()}};
}

}  // namespace

json depth_report(const AtomicMeasure& m, const Point& x, const DepthResult& r) {
  json trace = json::array();
  int level = x.dim();
  for (const TraceStep& step : r.trace) {
    trace.push_back(json{{"level", level--},
                         {"normal", direction_json(step.plane.normal)},
                         {"side", step.side > 0 ? "+" : "-"},
                         {"open_mass", rat_str(step.open_mass)}});
  }
  return json{{"query", point_json(x)},
              {"n_atoms", m.size()},
              {"total_mass", rational_json(m.total_mass())},
              {"depth", rational_json(*r.value.exact)},
              {"witness_flag", flag_json(r.witness)},
              {"trace", trace}};
}

json median_report(const MedianResult& r) {
  return json{{"alpha_star", rational_json(r.alpha_star)},
              {"body", polytope_json(r.body)},
              {"dimension", r.dimension},
              {"classification", median_class_name(r.classification)},
              {"warnings", r.warnings},
              {"verified", r.verified}};
}

json region_report(const DepthRegion& r) {
  return json{{"alpha", rational_json(r.alpha)}, {"body", polytope_json(r.body)}};
}

json census_report(const CensusReport& r) {
  json dims = json::object();
  for (const auto& [dim, count] : r.dim_histogram) dims[std::to_string(dim)] = count;
  json classes = json::object();
  for (const auto& [name, count] : r.classification_histogram) classes[name] = count;
  json violations = json::array();
  for (const auto& v : r.theorem_violations)
    violations.push_back(json{{"trial", v.trial},
                              {"dimension", v.dimension},
                              {"classification", v.classification},
                              {"note", v.note}});
  return json{{"params", json{{"n", r.n}, {"d", r.d}, {"trials", r.trials}, {"seed", r.seed}}},
              {"histograms", json{{"dimension", dims}, {"classification", classes}}},
              {"violations",
               json{{"general_position_resamples", r.gp_resampled_trials},
                    {"theorem_violations", violations}}},
              {"fixtures_version", "1"}};
}

json example_report(const ExampleReport& r) {
  json checks = json::array();
  for (const ExampleCheck& c : r.checks)
    checks.push_back(json{{"what", c.what}, {"passed", c.passed}, {"detail", c.detail}});
  return json{{"id", r.id}, {"passed", r.passed}, {"checks", checks}};
}

std::string example_report_text(const ExampleReport& r) {
  std::ostringstream out;
  out << "example " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << "\n";
  for (const ExampleCheck& c : r.checks) {
    out << "  [" << (c.passed ? "ok" : "FAIL") << "] " << c.what;
    if (!c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
  return out.str();
}

}  // namespace flagdepth
