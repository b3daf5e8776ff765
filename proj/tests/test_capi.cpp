#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <guf.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

namespace {

struct GraphHandle {
  guf_graph* g = nullptr;
  ~GraphHandle() { guf_graph_free(g); }
};

struct BasisHandle {
  guf_basis* b = nullptr;
  ~BasisHandle() { guf_basis_free(b); }
};

}  // namespace

TEST_CASE("graph construction and queries") {
  GraphHandle h;
  REQUIRE(guf_graph_parse("0 1 2.0\n1 2\n", &h.g) == GUF_OK);
  CHECK(guf_graph_vertex_count(h.g) == 3);
  CHECK(guf_graph_edge_count(h.g) == 2);
  CHECK(guf_graph_is_connected(h.g) == 1);
  CHECK(guf_graph_is_unit_weighted(h.g) == 0);

  std::vector<double> lap(9);
  REQUIRE(guf_graph_laplacian(h.g, lap.data()) == GUF_OK);
  CHECK(lap[0] == 2.0);   // (0,0)
  CHECK(lap[1] == -2.0);  // (0,1)
  CHECK(lap[4] == 3.0);   // (1,1)

  std::vector<double> inc(2 * 3);
  REQUIRE(guf_graph_incidence(h.g, inc.data()) == GUF_OK);
  CHECK(inc[0] == 1.0);
  CHECK(inc[1] == -1.0);

  guf_graph* bad = nullptr;
  CHECK(guf_graph_parse("0 0 1", &bad) == GUF_ERROR_PARSE);
  CHECK(std::strlen(guf_last_error()) > 0);
  CHECK(guf_graph_parse(nullptr, &bad) == GUF_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("basis lifecycle and spectra") {
  GraphHandle g;
  REQUIRE(guf_graph_complete(8, &g.g) == GUF_OK);
  BasisHandle b;
  REQUIRE(guf_basis_create(g.g, &b.b) == GUF_OK);

  std::vector<double> values(8);
  REQUIRE(guf_basis_eigenvalues(b.b, 0, values.data()) == GUF_OK);
  CHECK(std::abs(values[0]) <= 1e-10);
  CHECK(std::abs(values[7] - 8.0) <= 1e-10);

  REQUIRE(guf_basis_eigenvalues(b.b, 1, values.data()) == GUF_OK);
  CHECK(values[7] <= 2.0 + 1e-9);

  // disconnected graph is rejected at basis creation
  GraphHandle gap;
  REQUIRE(guf_graph_parse("0 1\n2 3", &gap.g) == GUF_OK);
  guf_basis* nope = nullptr;
  CHECK(guf_basis_create(gap.g, &nope) == GUF_ERROR_DOMAIN);
}

TEST_CASE("transform round trip through the C surface") {
  GraphHandle g;
  REQUIRE(guf_graph_cycle(6, &g.g) == GUF_OK);
  BasisHandle b;
  REQUIRE(guf_basis_create(g.g, &b.b) == GUF_OK);

  std::vector<double> f = {0.5, -1.0, 2.0, 0.0, 1.5, -0.25};
  std::vector<double> hat(6), back(6);
  REQUIRE(guf_gft(b.b, f.data(), hat.data()) == GUF_OK);
  REQUIRE(guf_igft(b.b, hat.data(), back.data()) == GUF_OK);
  for (int i = 0; i < 6; ++i) CHECK(std::abs(back[i] - f[i]) <= 1e-10);

  REQUIRE(guf_ngft(b.b, f.data(), hat.data()) == GUF_OK);
  REQUIRE(guf_ingft(b.b, hat.data(), back.data()) == GUF_OK);
  for (int i = 0; i < 6; ++i) CHECK(std::abs(back[i] - f[i]) <= 1e-10);

  std::vector<double> diff(6);
  REQUIRE(guf_difference(b.b, f.data(), diff.data()) == GUF_OK);
  double energy = 0.0;
  for (double v : diff) energy += v * v;
  double functional = 0.0;
  REQUIRE(guf_additive_functional(b.b, f.data(), 0, &functional) == GUF_OK);
  CHECK(functional >= energy - 1e-12);
}

TEST_CASE("bounds, frames, support through the C surface") {
  GraphHandle g;
  REQUIRE(guf_graph_complete(8, &g.g) == GUF_OK);
  BasisHandle b;
  REQUIRE(guf_basis_create(g.g, &b.b) == GUF_OK);

  double lower = 0, upper = 0;
  REQUIRE(guf_additive_bounds(b.b, 0, &lower, &upper) == GUF_OK);
  CHECK(std::abs(lower - (8.0 - std::sqrt(8.0))) <= 1e-9);
  CHECK(std::abs(upper - 16.0) <= 1e-9);

  REQUIRE(guf_frame_bounds(b.b, 2, 0, &lower, &upper) == GUF_OK);
  CHECK(std::abs(lower - 16.0) <= 1e-9);
  CHECK(guf_frame_bounds(b.b, 1, 0, &lower, &upper) == GUF_ERROR_INVALID_ARGUMENT);

  std::vector<double> frame(3 * 8);
  REQUIRE(guf_extremal_frame(b.b, 3, 0, 0, frame.data()) == GUF_OK);
  double objective = 0.0;
  REQUIRE(guf_frame_objective(b.b, frame.data(), 3, 0, &objective) == GUF_OK);
  REQUIRE(guf_frame_bounds(b.b, 3, 0, &lower, &upper) == GUF_OK);
  CHECK(std::abs(objective - lower) <= 1e-9);

  std::vector<double> chi1(8, 0.0);
  chi1[0] = 1.0 / std::sqrt(2.0);
  chi1[1] = -1.0 / std::sqrt(2.0);
  int64_t product = 0;
  REQUIRE(guf_support_product(b.b, chi1.data(), -1.0, &product) == GUF_OK);
  CHECK(product == 2);
}

TEST_CASE("curve and region through the C surface") {
  GraphHandle g;
  REQUIRE(guf_graph_cycle(8, &g.g) == GUF_OK);
  BasisHandle b;
  REQUIRE(guf_basis_create(g.g, &b.b) == GUF_OK);

  double x_low = 0, y_left = 0;
  REQUIRE(guf_axis_points(b.b, &x_low, &y_left) == GUF_OK);
  CHECK(std::abs(x_low - 2.0) <= 1e-12);
  CHECK(std::abs(y_left - 2.0) <= 1e-12);

  guf_duc_sample point;
  REQUIRE(guf_duc_point(b.b, 1.0, &point) == GUF_OK);
  CHECK(std::abs(point.x - 1.0) <= 1e-8);
  CHECK(guf_duc_point(b.b, -1.0, &point) == GUF_ERROR_DOMAIN);

  guf_curve* curve = nullptr;
  REQUIRE(guf_duc_curve(b.b, 16, &curve) == GUF_OK);
  int size = guf_curve_size(curve);
  CHECK(size == 18);  // 16 targets plus the two exact endpoints
  guf_duc_sample first;
  REQUIRE(guf_curve_sample(curve, 0, &first) == GUF_OK);
  CHECK(first.x == 0.0);
  CHECK(guf_curve_sample(curve, size, &first) == GUF_ERROR_INVALID_ARGUMENT);
  double alx = 0, aly = 0, lmax = 0;
  REQUIRE(guf_curve_info(curve, &alx, &aly, &lmax) == GUF_OK);
  CHECK(std::abs(lmax - 4.0) <= 1e-10);
  guf_curve_free(curve);

  guf_region* region = nullptr;
  REQUIRE(guf_region_compute(b.b, 16, 50, 7, &region) == GUF_OK);
  guf_region_report report;
  REQUIRE(guf_region_get_report(region, &report) == GUF_OK);
  CHECK(report.in_box == 1);
  CHECK(report.half_plane_ok == 1);
  CHECK(report.hull_ok == 1);
  CHECK(guf_region_witness_size(region) == 50);
  double wx = 0, wy = 0;
  REQUIRE(guf_region_witness(region, 0, &wx, &wy) == GUF_OK);
  CHECK(wx >= 0.0);
  guf_region_free(region);
}

TEST_CASE("complete-graph closed forms through the C surface") {
  double value = 0;
  REQUIRE(guf_kn_lambda_min(8, 0.0, &value) == GUF_OK);
  CHECK(value == 0.0);
  CHECK(guf_kn_lambda_min(2, 0.0, &value) == GUF_ERROR_DOMAIN);

  double x = 0, y = 0;
  REQUIRE(guf_kn_duc_point(8, 0.0, &x, &y) == GUF_OK);
  CHECK(std::abs(x - 7.0) <= 1e-12);

  double middle = 0, a = 0, bb = 0;
  int32_t mult = 0;
  REQUIRE(guf_kn_eigenstructure(8, 0.5, &middle, &mult, &a, &bb) == GUF_OK);
  CHECK(middle == doctest::Approx(4.0));
  CHECK(mult == 6);
  CHECK(guf_kn_eigenstructure(8, 0.0, &middle, &mult, &a, &bb) == GUF_ERROR_DOMAIN);

  double lower = 0, upper = 0;
  REQUIRE(guf_kn_additive_bounds(8, &lower, &upper) == GUF_OK);
  CHECK(std::abs(lower - (8.0 - std::sqrt(8.0))) <= 1e-15);
  REQUIRE(guf_kn_frame_lower(8, 3, &value) == GUF_OK);
  CHECK(value == 32.0);

  CHECK(std::string(guf_version()).size() > 0);
}
