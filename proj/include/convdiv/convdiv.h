/* convdiv — optimal successive-cut divisions of planar convex bodies.
 *
 * C interface of the shared library. All objects are opaque handles created
 * and destroyed through these functions; every call that can fail returns a
 * cdv_status, with a thread-local message available via cdv_last_error().
 */
#ifndef CONVDIV_H
#define CONVDIV_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cdv_status {
  CDV_OK = 0,
  CDV_ERR_INVALID_ARGUMENT = 1,
  CDV_ERR_NOT_CONVEX = 2,
  CDV_ERR_DEGENERATE = 3,
  CDV_ERR_TOO_FEW_VERTICES = 4,
  CDV_ERR_CUT_MISSES_INTERIOR = 5,
  CDV_ERR_RHO_RANGE = 6,
  CDV_ERR_TOLERANCE = 7,
  CDV_ERR_CONSTRUCTION = 8,
  CDV_ERR_VERIFICATION = 9,
  CDV_ERR_SCHEMA = 10,
  CDV_ERR_NOT_AFFINE = 11,
  CDV_UNSUPPORTED = 20,  /* combination has bounds only */
  CDV_INFEASIBLE = 21    /* no optimal division exists for this n */
} cdv_status;

typedef struct cdv_polygon cdv_polygon;
typedef struct cdv_report cdv_report;

const char* cdv_version(void);
/* Message for the most recent failing call on this thread. */
const char* cdv_last_error(void);
void cdv_string_free(char* s);

/* ---- polygons ---------------------------------------------------------- */

/* xy: interleaved coordinates, n points. Vertices are reoriented
 * counterclockwise; duplicate and collinear vertices are removed. */
cdv_status cdv_polygon_create(const double* xy, size_t n, cdv_polygon** out);
/* Document format: {"schema":1, "name":..., "vertices":[[x,y],...]} */
cdv_status cdv_polygon_from_json(const char* json, cdv_polygon** out);
cdv_status cdv_polygon_to_json(const cdv_polygon* poly, const char* name, char** out_json);
void cdv_polygon_free(cdv_polygon* poly);

typedef struct cdv_measures {
  double width;
  double diameter;
  double inradius;
  double area;
} cdv_measures;
cdv_status cdv_polygon_measure(const cdv_polygon* poly, cdv_measures* out);

/* ---- solving ----------------------------------------------------------- */

typedef struct cdv_solve_options {
  const char* problem;   /* "minmax" | "maxmin" */
  const char* magnitude; /* "diameter" | "width" | "inradius" */
  int n;                 /* >= 2 */
  double tol;            /* <= 0 selects the per-problem default */
  int with_oracle;       /* nonzero: run the brute-force reference too */
} cdv_solve_options;

/* Produces a report for every outcome: CDV_OK carries a value (or bounds for
 * the min-max diameter); CDV_UNSUPPORTED carries the applicable bounds;
 * CDV_INFEASIBLE carries the feasibility block. *out is set unless the input
 * itself is invalid. */
cdv_status cdv_solve(const cdv_polygon* poly, const cdv_solve_options* opts, cdv_report** out);

cdv_status cdv_report_to_json(const cdv_report* rep, char** out_json);
cdv_status cdv_report_from_json(const char* json, cdv_report** out);
void cdv_report_free(cdv_report* rep);

/* Recomputes the subset magnitudes by replaying the report's cuts.
 * values/cap(acity) follow the usual truncation contract; *n_out reports the
 * full subset count. */
cdv_status cdv_report_replay(const cdv_polygon* poly, const cdv_report* rep, double* values,
                             size_t cap, size_t* n_out);

/* ---- rendering --------------------------------------------------------- */

cdv_status cdv_render_svg(const cdv_polygon* poly, const cdv_report* rep, char** out_svg);

/* ---- brute-force oracle and division checks ---------------------------- */

typedef struct cdv_grid {
  int angle_samples;  /* default 360 when <= 0 */
  int offset_samples; /* default 200 when <= 0 */
  int refine_rounds;  /* default 3 when < 0 */
} cdv_grid;

cdv_status cdv_oracle_division(const cdv_polygon* poly, const char* problem,
                               const char* magnitude, int n, const cdv_grid* grid,
                               double* value_out);

/* Sum of subset widths and inradii over a seeded random division, together
 * with the body's own width and inradius (covering inequality checks). */
cdv_status cdv_random_division_sums(const cdv_polygon* poly, int n, unsigned long long seed,
                                    double* sum_width, double* sum_inradius, double* body_width,
                                    double* body_inradius);

#ifdef __cplusplus
}
#endif

#endif /* CONVDIV_H */
