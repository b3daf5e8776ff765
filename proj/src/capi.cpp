#include "guf.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "complete_graph.hpp"
#include "error.hpp"
#include "feasibility.hpp"
#include "graph.hpp"
#include "spectral.hpp"
#include "transforms.hpp"
#include "uncertainty.hpp"

struct guf_graph {
  guf::Graph graph;
};

struct guf_basis {
  guf::GraphBasis basis;
};

struct guf_curve {
  guf::UncertaintyCurve curve;
};

struct guf_region {
  guf::FeasibilityRegion region;
};

namespace {

thread_local std::string g_last_error;

guf_status status_of(guf::ErrorCode code) {
  switch (code) {
    case guf::ErrorCode::InvalidArgument: return GUF_ERROR_INVALID_ARGUMENT;
    case guf::ErrorCode::Parse: return GUF_ERROR_PARSE;
    case guf::ErrorCode::Domain: return GUF_ERROR_DOMAIN;
    case guf::ErrorCode::Dimension: return GUF_ERROR_DIMENSION;
    case guf::ErrorCode::Numeric: return GUF_ERROR_NUMERIC;
  }
  return GUF_ERROR_NUMERIC;
}

template <typename Fn>
guf_status wrap(Fn&& fn) {
  try {
    fn();
    return GUF_OK;
  } catch (const guf::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return GUF_ERROR_NUMERIC;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return GUF_ERROR_NUMERIC;
  }
}

guf_status invalid(const char* message) {
  g_last_error = message;
  return GUF_ERROR_INVALID_ARGUMENT;
}

void copy_matrix(const Eigen::MatrixXd& m, double* out) {
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) *out++ = m(r, c);
}

guf_duc_sample to_c(const guf::DucSample& s) {
  return {s.alpha, s.x, s.y, s.m_alpha, s.h_minus, s.h_plus, s.multiplicity};
}

template <typename Apply>
guf_status apply_signal(const guf_basis* b, const double* f, double* out, Apply&& op) {
  if (!b || !f || !out) return invalid("null argument");
  return wrap([&] {
    Eigen::Map<const Eigen::VectorXd> in(f, b->basis.order());
    Eigen::VectorXd result = op(in);
    copy_matrix(result, out);
  });
}

}  // namespace

extern "C" {

const char* guf_version(void) { return "0.1.0"; }

const char* guf_last_error(void) { return g_last_error.c_str(); }

/* ---- graphs ------------------------------------------------------- */

guf_status guf_graph_parse(const char* text, guf_graph** out) {
  if (!text || !out) return invalid("null argument");
  return wrap([&] { *out = new guf_graph{guf::parse_edge_list(text)}; });
}

guf_status guf_graph_complete(int32_t n, guf_graph** out) {
  if (!out) return invalid("null argument");
  return wrap([&] { *out = new guf_graph{guf::complete_graph(n)}; });
}

guf_status guf_graph_path(int32_t n, guf_graph** out) {
  if (!out) return invalid("null argument");
  return wrap([&] { *out = new guf_graph{guf::path_graph(n)}; });
}

guf_status guf_graph_cycle(int32_t n, guf_graph** out) {
  if (!out) return invalid("null argument");
  return wrap([&] { *out = new guf_graph{guf::cycle_graph(n)}; });
}

void guf_graph_free(guf_graph* g) { delete g; }

int32_t guf_graph_vertex_count(const guf_graph* g) { return g ? g->graph.order() : 0; }

int32_t guf_graph_edge_count(const guf_graph* g) { return g ? g->graph.edge_count() : 0; }

int32_t guf_graph_is_connected(const guf_graph* g) {
  return g && g->graph.connected() ? 1 : 0;
}

int32_t guf_graph_is_unit_weighted(const guf_graph* g) {
  return g && g->graph.unit_weighted() ? 1 : 0;
}

guf_status guf_graph_adjacency(const guf_graph* g, double* out) {
  if (!g || !out) return invalid("null argument");
  return wrap([&] { copy_matrix(g->graph.adjacency(), out); });
}

guf_status guf_graph_degrees(const guf_graph* g, double* out) {
  if (!g || !out) return invalid("null argument");
  return wrap([&] { copy_matrix(g->graph.degrees(), out); });
}

guf_status guf_graph_incidence(const guf_graph* g, double* out) {
  if (!g || !out) return invalid("null argument");
  return wrap([&] { copy_matrix(g->graph.incidence(), out); });
}

guf_status guf_graph_edge_weights(const guf_graph* g, double* out) {
  if (!g || !out) return invalid("null argument");
  return wrap([&] { copy_matrix(g->graph.edge_weights(), out); });
}

guf_status guf_graph_laplacian(const guf_graph* g, double* out) {
  if (!g || !out) return invalid("null argument");
  return wrap([&] { copy_matrix(g->graph.laplacian(), out); });
}

guf_status guf_graph_normalized_laplacian(const guf_graph* g, double* out) {
  if (!g || !out) return invalid("null argument");
  return wrap([&] { copy_matrix(g->graph.normalized_laplacian(), out); });
}

/* ---- spectral basis ------------------------------------------------ */

guf_status guf_basis_create(const guf_graph* g, guf_basis** out) {
  if (!g || !out) return invalid("null argument");
  return wrap([&] { *out = new guf_basis{guf::GraphBasis(g->graph)}; });
}

void guf_basis_free(guf_basis* b) { delete b; }

guf_status guf_basis_eigenvalues(const guf_basis* b, int32_t normalized, double* out) {
  if (!b || !out) return invalid("null argument");
  return wrap([&] {
    const guf::Spectrum& s =
        normalized ? b->basis.normalized_spectrum() : b->basis.laplacian_spectrum();
    copy_matrix(s.values, out);
  });
}

guf_status guf_basis_eigenvectors(const guf_basis* b, int32_t normalized, double* out) {
  if (!b || !out) return invalid("null argument");
  return wrap([&] {
    const guf::Spectrum& s =
        normalized ? b->basis.normalized_spectrum() : b->basis.laplacian_spectrum();
    copy_matrix(s.vectors, out);
  });
}

/* ---- transforms ----------------------------------------------------- */

guf_status guf_gft(const guf_basis* b, const double* f, double* out) {
  return apply_signal(b, f, out, [&](const auto& v) { return b->basis.gft(v); });
}

guf_status guf_igft(const guf_basis* b, const double* fhat, double* out) {
  return apply_signal(b, fhat, out, [&](const auto& v) { return b->basis.igft(v); });
}

guf_status guf_ngft(const guf_basis* b, const double* f, double* out) {
  return apply_signal(b, f, out, [&](const auto& v) { return b->basis.ngft(v); });
}

guf_status guf_ingft(const guf_basis* b, const double* fstar, double* out) {
  return apply_signal(b, fstar, out, [&](const auto& v) { return b->basis.ingft(v); });
}

guf_status guf_difference(const guf_basis* b, const double* f, double* out) {
  return apply_signal(b, f, out, [&](const auto& v) { return b->basis.difference(v); });
}

guf_status guf_normalized_difference(const guf_basis* b, const double* f, double* out) {
  return apply_signal(b, f, out,
                      [&](const auto& v) { return b->basis.normalized_difference(v); });
}

/* ---- uncertainty bounds --------------------------------------------- */

guf_status guf_additive_bounds(const guf_basis* b, int32_t normalized, double* lower,
                               double* upper) {
  if (!b || !lower || !upper) return invalid("null argument");
  return wrap([&] {
    guf::AdditiveBounds bounds = guf::additive_bounds(b->basis, normalized != 0);
    *lower = bounds.lower;
    *upper = bounds.upper;
  });
}

guf_status guf_modified_spectrum(const guf_basis* b, int32_t normalized, double* out) {
  if (!b || !out) return invalid("null argument");
  return wrap([&] {
    guf::AdditiveBounds bounds = guf::additive_bounds(b->basis, normalized != 0);
    copy_matrix(bounds.modified_spectrum.values, out);
  });
}

guf_status guf_additive_functional(const guf_basis* b, const double* f, int32_t normalized,
                                   double* out) {
  if (!b || !f || !out) return invalid("null argument");
  return wrap([&] {
    Eigen::Map<const Eigen::VectorXd> in(f, b->basis.order());
    *out = guf::additive_functional(b->basis, in, normalized != 0);
  });
}

guf_status guf_frame_bounds(const guf_basis* b, int32_t d, int32_t normalized, double* lower,
                            double* upper) {
  if (!b || !lower || !upper) return invalid("null argument");
  return wrap([&] {
    auto [lo, hi] = guf::frame_bounds(b->basis, d, normalized != 0);
    *lower = lo;
    *upper = hi;
  });
}

guf_status guf_extremal_frame(const guf_basis* b, int32_t d, int32_t maximize,
                              int32_t normalized, double* out) {
  if (!b || !out) return invalid("null argument");
  return wrap([&] {
    guf::ParsevalFrame frame =
        guf::extremal_frame(b->basis, d, maximize ? guf::FrameSide::Max : guf::FrameSide::Min,
                            normalized != 0);
    copy_matrix(frame.matrix(), out);
  });
}

guf_status guf_frame_objective(const guf_basis* b, const double* e, int32_t d,
                               int32_t normalized, double* out) {
  if (!b || !e || !out) return invalid("null argument");
  return wrap([&] {
    if (d < 1) guf::fail(guf::ErrorCode::InvalidArgument, "frame dimension must be positive");
    Eigen::MatrixXd frame(d, b->basis.order());
    for (int32_t r = 0; r < d; ++r)
      for (int c = 0; c < b->basis.order(); ++c) frame(r, c) = e[r * b->basis.order() + c];
    *out = guf::frame_objective(b->basis, guf::ParsevalFrame(std::move(frame)),
                                normalized != 0);
  });
}

guf_status guf_support_product(const guf_basis* b, const double* f, double zero_tol,
                               int64_t* out) {
  if (!b || !f || !out) return invalid("null argument");
  return wrap([&] {
    Eigen::Map<const Eigen::VectorXd> in(f, b->basis.order());
    *out = guf::support_product(b->basis, in, zero_tol);
  });
}

/* ---- feasibility region ---------------------------------------------- */

guf_status guf_axis_points(const guf_basis* b, double* x_low, double* y_left) {
  if (!b || !x_low || !y_left) return invalid("null argument");
  return wrap([&] {
    auto [low, left] = guf::axis_points(b->basis);
    *x_low = low.x();
    *y_left = left.y();
  });
}

guf_status guf_duc_point(const guf_basis* b, double x, guf_duc_sample* out) {
  if (!b || !out) return invalid("null argument");
  return wrap([&] { *out = to_c(guf::duc_point_for_x(b->basis, x)); });
}

guf_status guf_duc_curve(const guf_basis* b, int32_t num_points, guf_curve** out) {
  if (!b || !out) return invalid("null argument");
  return wrap([&] { *out = new guf_curve{guf::duc_curve(b->basis, num_points)}; });
}

void guf_curve_free(guf_curve* c) { delete c; }

int32_t guf_curve_size(const guf_curve* c) {
  return c ? static_cast<int32_t>(c->curve.samples.size()) : 0;
}

guf_status guf_curve_sample(const guf_curve* c, int32_t index, guf_duc_sample* out) {
  if (!c || !out) return invalid("null argument");
  if (index < 0 || index >= static_cast<int32_t>(c->curve.samples.size()))
    return invalid("sample index out of range");
  *out = to_c(c->curve.samples[index]);
  return GUF_OK;
}

guf_status guf_curve_info(const guf_curve* c, double* axis_low_x, double* axis_left_y,
                          double* lambda_max) {
  if (!c || !axis_low_x || !axis_left_y || !lambda_max) return invalid("null argument");
  *axis_low_x = c->curve.axis_low.x();
  *axis_left_y = c->curve.axis_left.y();
  *lambda_max = c->curve.lambda_max;
  return GUF_OK;
}

guf_status guf_region_compute(const guf_basis* b, int32_t curve_points, int32_t num_witnesses,
                              uint64_t seed, guf_region** out) {
  if (!b || !out) return invalid("null argument");
  return wrap([&] {
    *out = new guf_region{guf::feasibility_region(b->basis, curve_points, num_witnesses, seed)};
  });
}

void guf_region_free(guf_region* r) { delete r; }

int32_t guf_region_lower_size(const guf_region* r) {
  return r ? static_cast<int32_t>(r->region.lower.samples.size()) : 0;
}

int32_t guf_region_upper_size(const guf_region* r) {
  return r ? static_cast<int32_t>(r->region.upper.size()) : 0;
}

int32_t guf_region_witness_size(const guf_region* r) {
  return r ? static_cast<int32_t>(r->region.witnesses.size()) : 0;
}

guf_status guf_region_lower_sample(const guf_region* r, int32_t index, guf_duc_sample* out) {
  if (!r || !out) return invalid("null argument");
  if (index < 0 || index >= guf_region_lower_size(r)) return invalid("index out of range");
  *out = to_c(r->region.lower.samples[index]);
  return GUF_OK;
}

guf_status guf_region_upper_sample(const guf_region* r, int32_t index, guf_duc_sample* out) {
  if (!r || !out) return invalid("null argument");
  if (index < 0 || index >= guf_region_upper_size(r)) return invalid("index out of range");
  *out = to_c(r->region.upper[index]);
  return GUF_OK;
}

guf_status guf_region_witness(const guf_region* r, int32_t index, double* x, double* y) {
  if (!r || !x || !y) return invalid("null argument");
  if (index < 0 || index >= guf_region_witness_size(r)) return invalid("index out of range");
  *x = r->region.witnesses[index].x;
  *y = r->region.witnesses[index].y;
  return GUF_OK;
}

guf_status guf_region_get_report(const guf_region* r, guf_region_report* out) {
  if (!r || !out) return invalid("null argument");
  const guf::FeasibilityRegion& reg = r->region;
  *out = {reg.lambda_max,       reg.lambda_tilde_0,
          reg.min_x_plus_y,     reg.max_hull_violation,
          reg.in_box ? 1 : 0,   reg.half_plane_ok ? 1 : 0,
          reg.hull_ok ? 1 : 0,  reg.midpoints_ok ? 1 : 0,
          reg.convex_ok ? 1 : 0, reg.circle_ok ? 1 : 0};
  return GUF_OK;
}

/* ---- complete-graph closed forms -------------------------------------- */

guf_status guf_kn_lambda_min(int32_t n, double alpha, double* out) {
  if (!out) return invalid("null argument");
  return wrap([&] { *out = guf::kn::lambda_min(n, alpha); });
}

guf_status guf_kn_x_of_alpha(int32_t n, double alpha, double* out) {
  if (!out) return invalid("null argument");
  return wrap([&] { *out = guf::kn::x_of_alpha(n, alpha); });
}

guf_status guf_kn_duc_point(int32_t n, double alpha, double* x, double* y) {
  if (!x || !y) return invalid("null argument");
  return wrap([&] {
    auto [px, py] = guf::kn::duc_point(n, alpha);
    *x = px;
    *y = py;
  });
}

guf_status guf_kn_eigenstructure(int32_t n, double alpha, double* middle,
                                 int32_t* middle_multiplicity, double* outlier_a,
                                 double* outlier_b) {
  if (!middle || !middle_multiplicity || !outlier_a || !outlier_b)
    return invalid("null argument");
  return wrap([&] {
    guf::kn::Eigenstructure e = guf::kn::eigenstructure(n, alpha);
    *middle = e.middle;
    *middle_multiplicity = e.middle_multiplicity;
    *outlier_a = e.outlier_a;
    *outlier_b = e.outlier_b;
  });
}

guf_status guf_kn_additive_bounds(int32_t n, double* lower, double* upper) {
  if (!lower || !upper) return invalid("null argument");
  return wrap([&] {
    guf::kn::Bounds bounds = guf::kn::additive_bounds(n);
    *lower = bounds.additive_lower;
    *upper = bounds.additive_upper;
  });
}

guf_status guf_kn_frame_lower(int32_t n, int32_t d, double* out) {
  if (!out) return invalid("null argument");
  return wrap([&] { *out = guf::kn::frame_lower(n, d); });
}

}  // extern "C"
