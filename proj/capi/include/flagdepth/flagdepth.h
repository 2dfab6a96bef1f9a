/* C API of the flagdepth library: exact halfspace (Tukey) depth, depth
 * regions, medians, and Monte Carlo census runs over an opaque dataset
 * handle. All results are returned as JSON or SVG strings owned by the
 * library; release them with fd_string_free. Functions return FD_OK on
 * success; fd_last_error() describes the most recent failure on the
 * calling thread. */

#ifndef FLAGDEPTH_H
#define FLAGDEPTH_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fd_status {
  FD_OK = 0,
  FD_ERROR = 1,              /* unspecified failure */
  FD_PARSE_ERROR = 2,        /* malformed CSV / numeric / point literal */
  FD_DIMENSION_MISMATCH = 3, /* point or operation of the wrong dimension */
  FD_THEOREM_VIOLATION = 4,  /* census recorded a theorem violation */
  FD_INVALID_ARGUMENT = 5
} fd_status;

typedef struct fd_dataset fd_dataset;

const char* fd_version(void);
const char* fd_last_error(void);

/* Dataset CSV: one point per row, decimal or "p/q" literals, optional
 * header with a "w" weight column. */
fd_status fd_dataset_parse_csv(const char* csv_text, fd_dataset** out);
void fd_dataset_free(fd_dataset* ds);
int fd_dataset_dim(const fd_dataset* ds);
int fd_dataset_size(const fd_dataset* ds);
fd_status fd_dataset_write_csv(const fd_dataset* ds, char** csv_out);

/* Exact depth of a point ("x1,x2,..." literals) with the minimising flag
 * witness and the recursion trace, as JSON. */
fd_status fd_depth(const fd_dataset* ds, const char* point, char** json_out);

/* Halfspace median set with dimension classification (d = 2 or 3). */
fd_status fd_median(const fd_dataset* ds, char** json_out);

/* Central region D_alpha in the plane; alpha is a rational literal. */
fd_status fd_region(const fd_dataset* ds, const char* alpha, char** json_out);

/* SVG figure of a planar dataset with its median (alpha == NULL) or the
 * region D_alpha. */
fd_status fd_svg(const fd_dataset* ds, const char* alpha, char** svg_out);

/* Median-dimension census over `trials` seeded Gaussian samples.
 * Returns FD_OK even when violations were recorded; *theorem_violated is
 * set to 1 in that case and the JSON carries the details. */
fd_status fd_census(int n, int d, int trials, uint64_t seed, char** json_out,
                    int* theorem_violated);

/* Reruns a packaged example (ex2.1, ex3.2-k0, ex3.2-k1, ex3.2-k3,
 * ex4.2); *passed reports whether every assertion held. */
fd_status fd_reproduce(const char* example_id, char** json_out, int* passed);

void fd_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* FLAGDEPTH_H */
