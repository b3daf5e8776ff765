/* guf — graph uncertainty & feasibility toolkit, C interface.
 *
 * All handles are opaque and freed with the matching *_free call. Matrix
 * buffers are caller-allocated, row-major double arrays sized from the
 * graph dimensions. Every function returns GUF_OK or an error code;
 * guf_last_error() describes the most recent failure on this thread.
 */
#ifndef GUF_H
#define GUF_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum guf_status {
  GUF_OK = 0,
  GUF_ERROR_INVALID_ARGUMENT = 1,
  GUF_ERROR_PARSE = 2,
  GUF_ERROR_DOMAIN = 3,
  GUF_ERROR_DIMENSION = 4,
  GUF_ERROR_NUMERIC = 5
} guf_status;

typedef struct guf_graph guf_graph;
typedef struct guf_basis guf_basis;
typedef struct guf_curve guf_curve;
typedef struct guf_region guf_region;

typedef struct guf_duc_sample {
  double alpha;
  double x;
  double y;
  double m;
  double h_minus;
  double h_plus;
  int32_t multiplicity;
} guf_duc_sample;

const char* guf_version(void);
const char* guf_last_error(void);

/* ---- graphs ------------------------------------------------------- */

/* Edge-list text: one "u v [w]" per line, 0-based indices, weight
 * defaulting to 1, '#' comments. Vertex count is 1 + max index. */
guf_status guf_graph_parse(const char* text, guf_graph** out);
guf_status guf_graph_complete(int32_t n, guf_graph** out);
guf_status guf_graph_path(int32_t n, guf_graph** out);
guf_status guf_graph_cycle(int32_t n, guf_graph** out);
void guf_graph_free(guf_graph* g);

int32_t guf_graph_vertex_count(const guf_graph* g);
int32_t guf_graph_edge_count(const guf_graph* g);
int32_t guf_graph_is_connected(const guf_graph* g);
int32_t guf_graph_is_unit_weighted(const guf_graph* g);

guf_status guf_graph_adjacency(const guf_graph* g, double* out);            /* n*n */
guf_status guf_graph_degrees(const guf_graph* g, double* out);              /* n   */
guf_status guf_graph_incidence(const guf_graph* g, double* out);            /* m*n */
guf_status guf_graph_edge_weights(const guf_graph* g, double* out);         /* m   */
guf_status guf_graph_laplacian(const guf_graph* g, double* out);            /* n*n */
guf_status guf_graph_normalized_laplacian(const guf_graph* g, double* out); /* n*n */

/* ---- spectral basis ------------------------------------------------ */

/* Eigendecomposes both Laplacians; the graph must be connected. */
guf_status guf_basis_create(const guf_graph* g, guf_basis** out);
void guf_basis_free(guf_basis* b);

/* Eigenvalues ascending; eigenvector matrix is row-major with columns
 * aligned to the values. normalized != 0 selects the normalized pair. */
guf_status guf_basis_eigenvalues(const guf_basis* b, int32_t normalized, double* out);
guf_status guf_basis_eigenvectors(const guf_basis* b, int32_t normalized, double* out);

/* ---- transforms ----------------------------------------------------- */

guf_status guf_gft(const guf_basis* b, const double* f, double* out);
guf_status guf_igft(const guf_basis* b, const double* fhat, double* out);
guf_status guf_ngft(const guf_basis* b, const double* f, double* out);
guf_status guf_ingft(const guf_basis* b, const double* fstar, double* out);
guf_status guf_difference(const guf_basis* b, const double* f, double* out);            /* m */
guf_status guf_normalized_difference(const guf_basis* b, const double* f, double* out); /* m */

/* ---- uncertainty bounds --------------------------------------------- */

guf_status guf_additive_bounds(const guf_basis* b, int32_t normalized, double* lower,
                               double* upper);
/* Ascending eigenvalues of the modified operator (n values). */
guf_status guf_modified_spectrum(const guf_basis* b, int32_t normalized, double* out);
guf_status guf_additive_functional(const guf_basis* b, const double* f, int32_t normalized,
                                   double* out);
guf_status guf_frame_bounds(const guf_basis* b, int32_t d, int32_t normalized, double* lower,
                            double* upper);
/* Frame attaining the lower (maximize == 0) or upper bound; out is d*n. */
guf_status guf_extremal_frame(const guf_basis* b, int32_t d, int32_t maximize,
                              int32_t normalized, double* out);
guf_status guf_frame_objective(const guf_basis* b, const double* e, int32_t d,
                               int32_t normalized, double* out);
/* zero_tol <= 0 selects the default 1e-9 * ||f||_inf. */
guf_status guf_support_product(const guf_basis* b, const double* f, double zero_tol,
                               int64_t* out);

/* ---- feasibility region ---------------------------------------------- */

guf_status guf_axis_points(const guf_basis* b, double* x_low, double* y_left);
guf_status guf_duc_point(const guf_basis* b, double x, guf_duc_sample* out);

guf_status guf_duc_curve(const guf_basis* b, int32_t num_points, guf_curve** out);
void guf_curve_free(guf_curve* c);
int32_t guf_curve_size(const guf_curve* c);
guf_status guf_curve_sample(const guf_curve* c, int32_t index, guf_duc_sample* out);
guf_status guf_curve_info(const guf_curve* c, double* axis_low_x, double* axis_left_y,
                          double* lambda_max);

typedef struct guf_region_report {
  double lambda_max;
  double lambda_tilde_0;
  double min_x_plus_y;
  double max_hull_violation;
  int32_t in_box;
  int32_t half_plane_ok;
  int32_t hull_ok;
  int32_t midpoints_ok;
  int32_t convex_ok;
  int32_t circle_ok;
} guf_region_report;

guf_status guf_region_compute(const guf_basis* b, int32_t curve_points, int32_t num_witnesses,
                              uint64_t seed, guf_region** out);
void guf_region_free(guf_region* r);
int32_t guf_region_lower_size(const guf_region* r);
int32_t guf_region_upper_size(const guf_region* r);
int32_t guf_region_witness_size(const guf_region* r);
guf_status guf_region_lower_sample(const guf_region* r, int32_t index, guf_duc_sample* out);
guf_status guf_region_upper_sample(const guf_region* r, int32_t index, guf_duc_sample* out);
guf_status guf_region_witness(const guf_region* r, int32_t index, double* x, double* y);
guf_status guf_region_get_report(const guf_region* r, guf_region_report* out);

/* ---- complete-graph closed forms -------------------------------------- */

guf_status guf_kn_lambda_min(int32_t n, double alpha, double* out);
guf_status guf_kn_x_of_alpha(int32_t n, double alpha, double* out);
guf_status guf_kn_duc_point(int32_t n, double alpha, double* x, double* y);
guf_status guf_kn_eigenstructure(int32_t n, double alpha, double* middle,
                                 int32_t* middle_multiplicity, double* outlier_a,
                                 double* outlier_b);
guf_status guf_kn_additive_bounds(int32_t n, double* lower, double* upper);
guf_status guf_kn_frame_lower(int32_t n, int32_t d, double* out);

#ifdef __cplusplus
}
#endif

#endif /* GUF_H */
