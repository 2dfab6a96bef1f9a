#include "flagdepth/flagdepth.h"

#include "flagdepth/csv.hpp"
#include "flagdepth/report.hpp"
#include "flagdepth/svg.hpp"

#include <cstring>
#include <new>
#include <string>

using namespace flagdepth;

struct fd_dataset {
  AtomicMeasure measure;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(::operator new(s.size() + 1, std::nothrow));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
fd_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    g_last_error = e.what();
    return FD_PARSE_ERROR;
  } catch (const DimensionMismatch& e) {
    g_last_error = e.what();
    return FD_DIMENSION_MISMATCH;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return FD_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FD_ERROR;
  } catch (...) {
    g_last_error = "unknown error";
    return FD_ERROR;
  }
}

fd_status out_string(const std::string& s, char** out) {
  *out = dup_string(s);
  if (!*out) {
    g_last_error = "out of memory";
    return FD_ERROR;
  }
  return FD_OK;
}

}  // namespace

extern "C" {

const char* fd_version(void) { return "1.0.0"; }

const char* fd_last_error(void) { return g_last_error.c_str(); }

fd_status fd_dataset_parse_csv(const char* csv_text, fd_dataset** out) {
  if (!csv_text || !out) {
    g_last_error = "null argument";
    return FD_INVALID_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] {
    auto m = parse_dataset_csv(csv_text);
    *out = new fd_dataset{std::move(m)};
    return FD_OK;
  });
}

void fd_dataset_free(fd_dataset* ds) { delete ds; }

int fd_dataset_dim(const fd_dataset* ds) { return ds ? ds->measure.dim() : 0; }

int fd_dataset_size(const fd_dataset* ds) { return ds ? static_cast<int>(ds->measure.size()) : 0; }

fd_status fd_dataset_write_csv(const fd_dataset* ds, char** csv_out) {
  if (!ds || !csv_out) {
    g_last_error = "null argument";
    return FD_INVALID_ARGUMENT;
  }
  return guarded([&] { return out_string(write_dataset_csv(ds->measure), csv_out); });
}

fd_status fd_depth(const fd_dataset* ds, const char* point, char** json_out) {
  if (!ds || !point || !json_out) {
    g_last_error = "null argument";
    return FD_INVALID_ARGUMENT;
  }
  return guarded([&] {
    Point x = parse_point(point);
    DepthResult r = exact_depth(ds->measure, x);
    return out_string(depth_report(ds->measure, x, r).dump(2), json_out);
  });
}

fd_status fd_median(const fd_dataset* ds, char** json_out) {
  if (!ds || !json_out) {
    g_last_error = "null argument";
    return FD_INVALID_ARGUMENT;
  }
  return guarded([&] {
    const int d = ds->measure.dim();
    if (d != 2 && d != 3) throw DimensionMismatch("median: dataset must be 2- or 3-dimensional");
    MedianResult r = d == 2 ? median_2d(ds->measure) : median_3d(ds->measure);
    return out_string(median_report(r).dump(2), json_out);
  });
}

fd_status fd_region(const fd_dataset* ds, const char* alpha, char** json_out) {
  if (!ds || !alpha || !json_out) {
    g_last_error = "null argument";
    return FD_INVALID_ARGUMENT;
  }
  return guarded([&] {
    if (ds->measure.dim() != 2) throw DimensionMismatch("region: dataset must be planar");
    DepthRegion r = depth_region_2d(ds->measure, rat_parse(alpha));
    return out_string(region_report(r).dump(2), json_out);
  });
}

fd_status fd_svg(const fd_dataset* ds, const char* alpha, char** svg_out) {
  if (!ds || !svg_out) {
    g_last_error = "null argument";
    return FD_INVALID_ARGUMENT;
  }
  return guarded([&] {
    if (ds->measure.dim() != 2) throw DimensionMismatch("svg: dataset must be planar");
    ConvexPolytope body;
    std::string title;
    if (alpha) {
      body = depth_region_2d(ds->measure, rat_parse(alpha)).body;
      title = std::string("central region D_") + alpha;
    } else {
      body = median_2d(ds->measure).body;
      title = "halfspace median set";
    }
    return out_string(svg_scene_2d(ds->measure, &body, title), svg_out);
  });
}

fd_status fd_census(int n, int d, int trials, uint64_t seed, char** json_out,
                    int* theorem_violated) {
  if (!json_out) {
    g_last_error = "null argument";
    return FD_INVALID_ARGUMENT;
  }
  return guarded([&] {
    CensusReport rep = dimension_census(n, d, trials, seed);
    if (theorem_violated) *theorem_violated = rep.theorem_violations.empty() ? 0 : 1;
    return out_string(census_report(rep).dump(2), json_out);
  });
}

fd_status fd_reproduce(const char* example_id, char** json_out, int* passed) {
  if (!example_id || !json_out) {
    g_last_error = "null argument";
    return FD_INVALID_ARGUMENT;
  }
  return guarded([&] {
    ExampleReport rep = reproduce_example(example_id);
    if (passed) *passed = rep.passed ? 1 : 0;
    return out_string(example_report(rep).dump(2), json_out);
  });
}

void fd_string_free(char* s) { ::operator delete(s); }

}  // extern "C"
