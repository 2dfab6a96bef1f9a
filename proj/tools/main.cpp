// flagdepth: exact halfspace depth, depth regions, medians, and census
// runs from the command line. Thin shell over the C API.

#include <flagdepth/flagdepth.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitDimension = 3;
constexpr int kExitTheorem = 4;

int exit_code_for(fd_status st) {
  switch (st) {
    case FD_OK: return kExitOk;
    case FD_PARSE_ERROR: return kExitParse;
    case FD_DIMENSION_MISMATCH: return kExitDimension;
    case FD_THEOREM_VIOLATION: return kExitTheorem;
    default: return kExitError;
  }
}

int fail(fd_status st) {
  std::cerr << "error: " << fd_last_error() << "\n";
  return exit_code_for(st);
}

struct StringGuard {
  char* s = nullptr;
  ~StringGuard() { fd_string_free(s); }
};

struct DatasetGuard {
  fd_dataset* ds = nullptr;
  ~DatasetGuard() { fd_dataset_free(ds); }
};

int load_dataset(const std::string& path, DatasetGuard& g) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    return kExitParse;
  }
  std::ostringstream text;
  text << in.rdbuf();
  fd_status st = fd_dataset_parse_csv(text.str().c_str(), &g.ds);
  if (st != FD_OK) return fail(st);
  return kExitOk;
}

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    return false;
  }
  out << content;
  return true;
}

// JSON goes to --out when given, otherwise to stdout.
int deliver(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content << "\n";
    return kExitOk;
  }
  return write_file(out_path, content) ? kExitOk : kExitError;
}

std::string join_csv(const json& arr) {
  std::string s;
  for (const auto& v : arr) {
    if (!s.empty()) s += ",";
    s += v.get<std::string>();
  }
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact halfspace depth via flag halfspaces"};
  app.require_subcommand(1);

  std::string in_path, out_path, at, alpha, example, svg_path;
  int n = 8, d = 3, trials = 100;
  std::uint64_t seed = 7;

  auto* cmd_depth = app.add_subcommand("depth", "exact depth of a point with witness flag");
  cmd_depth->add_option("--in", in_path, "dataset CSV")->required();
  cmd_depth->add_option("--at", at, "query point, e.g. 1/10,1/10,0")->required();
  cmd_depth->add_option("--out", out_path, "write the JSON report here");

  auto* cmd_median = app.add_subcommand("median", "halfspace median set (d = 2 or 3)");
  cmd_median->add_option("--in", in_path, "dataset CSV")->required();
  cmd_median->add_option("--out", out_path, "write the JSON report here");
  cmd_median->add_option("--emit-svg", svg_path, "write an SVG figure (d = 2)");

  auto* cmd_region = app.add_subcommand("region", "central region D_alpha (d = 2)");
  cmd_region->add_option("--in", in_path, "dataset CSV")->required();
  cmd_region->add_option("--alpha", alpha, "depth level, rational like 1/4")->required();
  cmd_region->add_option("--out", out_path, "write the JSON report here");
  cmd_region->add_option("--emit-svg", svg_path, "write an SVG figure");

  auto* cmd_sim = app.add_subcommand("simulate", "median-dimension census of Gaussian samples");
  cmd_sim->add_option("--n", n, "points per trial")->required();
  cmd_sim->add_option("--d", d, "dimension (2 or 3)")->required();
  cmd_sim->add_option("--trials", trials, "number of trials")->required();
  cmd_sim->add_option("--seed", seed, "census seed");
  cmd_sim->add_option("--out", out_path, "write the census JSON here");

  auto* cmd_rep = app.add_subcommand("reproduce", "rerun a packaged example");
  cmd_rep->add_option("--example", example, "ex2.1, ex3.2-k0, ex3.2-k1, ex3.2-k3, ex4.2")
      ->required();
  cmd_rep->add_option("--out", out_path, "write the JSON report here");

  CLI11_PARSE(app, argc, argv);

  if (cmd_depth->parsed()) {
    DatasetGuard ds;
    if (int rc = load_dataset(in_path, ds); rc != kExitOk) return rc;
    StringGuard s;
    fd_status st = fd_depth(ds.ds, at.c_str(), &s.s);
    if (st != FD_OK) return fail(st);
    json rep = json::parse(s.s);
    std::cout << "depth: " << rep["depth"]["str"].get<std::string>() << " ("
              << rep["depth"]["decimal"].get<double>() << ")\n";
    std::cout << "witness flag at " << join_csv(rep["witness_flag"]["center"]) << ":\n";
    for (const auto& nrm : rep["witness_flag"]["normals"])
      std::cout << "  normal (" << join_csv(nrm) << ")\n";
    std::cout << "trace:\n";
    for (const auto& step : rep["trace"])
      std::cout << "  level " << step["level"].get<int>() << ": normal ("
                << join_csv(step["normal"]) << ") side " << step["side"].get<std::string>()
                << " open mass " << step["open_mass"].get<std::string>() << "\n";
    if (!out_path.empty() && !write_file(out_path, s.s)) return kExitError;
    return kExitOk;
  }

  if (cmd_median->parsed()) {
    DatasetGuard ds;
    if (int rc = load_dataset(in_path, ds); rc != kExitOk) return rc;
    StringGuard s;
    fd_status st = fd_median(ds.ds, &s.s);
    if (st != FD_OK) return fail(st);
    if (!svg_path.empty()) {
      StringGuard svg;
      fd_status sst = fd_svg(ds.ds, nullptr, &svg.s);
      if (sst != FD_OK) return fail(sst);
      if (!write_file(svg_path, svg.s)) return kExitError;
    }
    return deliver(s.s, out_path);
  }

  if (cmd_region->parsed()) {
    DatasetGuard ds;
    if (int rc = load_dataset(in_path, ds); rc != kExitOk) return rc;
    StringGuard s;
    fd_status st = fd_region(ds.ds, alpha.c_str(), &s.s);
    if (st != FD_OK) return fail(st);
    if (!svg_path.empty()) {
      StringGuard svg;
      fd_status sst = fd_svg(ds.ds, alpha.c_str(), &svg.s);
      if (sst != FD_OK) return fail(sst);
      if (!write_file(svg_path, svg.s)) return kExitError;
    }
    return deliver(s.s, out_path);
  }

  if (cmd_sim->parsed()) {
    StringGuard s;
    int violated = 0;
    fd_status st = fd_census(n, d, trials, seed, &s.s, &violated);
    if (st != FD_OK) return fail(st);
    int rc = deliver(s.s, out_path);
    if (rc != kExitOk) return rc;
    if (violated) {
      std::cerr << "census recorded theorem violations\n";
      return kExitTheorem;
    }
    return kExitOk;
  }

  if (cmd_rep->parsed()) {
    StringGuard s;
    int passed = 0;
    fd_status st = fd_reproduce(example.c_str(), &s.s, &passed);
    if (st != FD_OK) return fail(st);
    json rep = json::parse(s.s);
    std::cout << "example " << rep["id"].get<std::string>() << ": "
              << (passed ? "PASS" : "FAIL") << "\n";
    for (const auto& c : rep["checks"]) {
      std::cout << "  [" << (c["passed"].get<bool>() ? "ok" : "FAIL") << "] "
                << c["what"].get<std::string>();
      std::string detail = c["detail"].get<std::string>();
      if (!detail.empty()) std::cout << " (" << detail << ")";
      std::cout << "\n";
    }
    if (!out_path.empty() && !write_file(out_path, s.s)) return kExitError;
    return passed ? kExitOk : kExitError;
  }

  return kExitError;
}
