#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "complete_graph.hpp"
#include "feasibility.hpp"
#include "support.hpp"
#include "uncertainty.hpp"

using guf::GraphBasis;
namespace kn = guf::kn;

TEST_CASE("lambda_min closed form") {
  for (int n = 3; n <= 16; ++n) CHECK(kn::lambda_min(n, 0.0) == 0.0);

  GraphBasis k8(guf::complete_graph(8));
  for (double alpha : {1.0, -3.0}) {
    double numeric = guf::min_eigpair(k8, alpha).first;
    CHECK(std::abs(kn::lambda_min(8, alpha) - numeric) <= 1e-9);
  }
  CHECK_THROWS_AS(kn::lambda_min(2, 0.5), guf::Error);
}

TEST_CASE("x_of_alpha and the pencil eigenvector") {
  CHECK(kn::x_of_alpha(8, 0.0) == doctest::Approx(1.0).epsilon(1e-15));

  int n = 8;
  GraphBasis k8(guf::complete_graph(n));
  double alpha = 2.0;
  Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
  v(0) = kn::x_of_alpha(n, alpha);
  Eigen::MatrixXd k = guf::k_matrix(k8, alpha);
  Eigen::VectorXd residual = k * v - kn::lambda_min(n, alpha) * v;
  CHECK(residual.cwiseAbs().maxCoeff() < 1e-8);

  double prev = kn::x_of_alpha(n, -10.0);
  for (int i = 1; i <= 100; ++i) {
    double cur = kn::x_of_alpha(n, -10.0 + 0.2 * i);
    CHECK(cur <= prev + 1e-12);
    prev = cur;
  }
}

TEST_CASE("closed-form boundary point") {
  for (int n : {3, 8, 16}) {
    auto [x0, y0] = kn::duc_point(n, 0.0);
    CHECK(x0 == doctest::Approx(n - 1.0).epsilon(1e-14));
    CHECK(std::abs(y0) <= 1e-14);
  }
  auto [x_far, y_far] = kn::duc_point(8, -1e6);
  CHECK(std::abs(x_far) <= 1e-3);
  CHECK(std::abs(y_far - 7.0) <= 1e-3);
}

TEST_CASE("parametric sweep stays on one conic") {
  // fit the implicit conic through 5 sweep points, then check the rest
  int n = 8;
  auto row = [&](double alpha) {
    auto [x, y] = kn::duc_point(n, alpha);
    Eigen::RowVector<double, 6> r;
    r << x * x, x * y, y * y, x, y, 1.0;
    return r;
  };
  Eigen::MatrixXd fit(5, 6);
  double fit_alphas[5] = {-2.0, -0.5, 0.0, 0.7, 3.0};
  for (int i = 0; i < 5; ++i) fit.row(i) = row(fit_alphas[i]);
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(fit, Eigen::ComputeFullV);
  Eigen::VectorXd conic = svd.matrixV().col(5);
  conic /= conic.cwiseAbs().maxCoeff();
  for (int i = 0; i < 200; ++i) {
    double alpha = -20.0 + 0.2 * i;
    CHECK(std::abs(row(alpha).dot(conic)) < 1e-6);
  }
}

TEST_CASE("sweep overlays the generic tracer") {
  for (int n : {3, 8}) {
    GraphBasis b(guf::complete_graph(n));
    for (int i = 0; i < 40; ++i) {
      double alpha = -8.0 + 0.4 * i;
      auto [x, y] = kn::duc_point(n, alpha);
      if (x <= 1e-6 || x >= n - 1e-6) continue;
      guf::DucSample s = guf::duc_point_for_x(b, x);
      CHECK(std::abs(s.y - y) <= 1e-6 * b.lambda_max());
    }
  }
}

TEST_CASE("eigenstructure report") {
  kn::Eigenstructure e = kn::eigenstructure(8, 0.5);
  CHECK(e.middle == doctest::Approx(4.0));
  CHECK(e.middle_multiplicity == 6);

  kn::Eigenstructure e1 = kn::eigenstructure(8, 1.0);
  CHECK(e1.middle == doctest::Approx(0.0));

  // outliers reproduce the two non-middle eigenvalues of the dense pencil
  GraphBasis k8(guf::complete_graph(8));
  for (double alpha : {0.5, 1.0, -2.0}) {
    kn::Eigenstructure est = kn::eigenstructure(8, alpha);
    guf::Spectrum s = guf::sym_eig(guf::k_matrix(k8, alpha));
    Eigen::VectorXd expected(8);
    expected(0) = est.outlier_a;
    expected(1) = est.outlier_b;
    for (int i = 2; i < 8; ++i) expected(i) = est.middle;
    std::sort(expected.data(), expected.data() + 8);
    CHECK((expected - s.values).cwiseAbs().maxCoeff() <= 1e-8);
  }

  CHECK_THROWS_AS(kn::eigenstructure(8, 0.0), guf::Error);
  CHECK_THROWS_AS(kn::eigenstructure(2, 0.5), guf::Error);
}

TEST_CASE("bounds report") {
  kn::Bounds b8 = kn::additive_bounds(8);
  CHECK(b8.additive_lower == doctest::Approx(8.0 - 2.0 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK(b8.additive_upper == 16.0);
  kn::Bounds b3 = kn::additive_bounds(3);
  CHECK(b3.additive_lower == doctest::Approx(3.0 - std::sqrt(3.0)).epsilon(1e-15));
  CHECK(b3.additive_upper == 6.0);
  CHECK(kn::frame_lower(8, 3) == 32.0);
  CHECK_THROWS_AS(kn::additive_bounds(2), guf::Error);
  CHECK_THROWS_AS(kn::frame_lower(8, 1), guf::Error);

  // consistency against the generic machinery
  GraphBasis k8(guf::complete_graph(8));
  guf::AdditiveBounds generic = guf::additive_bounds(k8);
  CHECK(std::abs(generic.lower - b8.additive_lower) <= 1e-9);
  CHECK(std::abs(generic.upper - b8.additive_upper) <= 1e-9);
  for (int d = 2; d <= 8; ++d)
    CHECK(kn::frame_lower(8, d) <= guf::frame_bounds(k8, d).first + 1e-9);
}
