#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "transforms.hpp"

namespace guf {

/// One traced point of the feasibility boundary. x and y are the values of
/// the two difference energies <nu, diag(lambda) nu> and <nu, L nu> at the
/// attaining unit vector; m_alpha is the extremal eigenvalue of the pencil
/// at alpha, so y = m_alpha + alpha * x. For the appended x = 0 endpoint
/// alpha is -infinity; for the n = 2 circle samples the pencil fields are
/// NaN.
struct DucSample {
  double alpha;
  double x;
  double y;
  double m_alpha;
  int multiplicity;
  double h_minus;
  double h_plus;
};

struct UncertaintyCurve {
  std::vector<DucSample> samples;  // sorted by x (circle order when n == 2)
  Eigen::Vector2d axis_low;        // (sum lambda / n, 0)
  Eigen::Vector2d axis_left;       // (0, L_{0,0})
  double lambda_max;
};

struct SolverConfig {
  double x_tol = -1.0;            // <= 0: 1e-10 * max(1, lambda_max)
  double crossing_width = 1e-10;  // alpha interval below which a jump is declared
  double bracket_scale = 1e3;     // initial bracket is [-scale, scale] * lambda_max
  int max_expand = 60;
  int max_bisect = 400;
};

/// L - alpha * diag(lambda).
Eigen::MatrixXd k_matrix(const GraphBasis& b, double alpha);

/// Minimal eigenvalue of K(alpha) and an orthonormal basis of every
/// eigenvector within mult_tol of it (default_mult_tol when mult_tol <= 0).
std::pair<double, Eigen::MatrixXd> min_eigpair(const GraphBasis& b, double alpha,
                                               double mult_tol = -1.0);

/// Extreme values of <g, diag(lambda) g> over unit g in the minimal
/// eigenspace of K(alpha): the compression spectrum endpoints.
std::pair<double, double> h_bounds(const GraphBasis& b, double alpha, double mult_tol = -1.0);

/// Point of the lower boundary at <nu, diag(lambda) nu> = x, found by
/// bisecting alpha over the monotone compression bounds and, inside a jump
/// interval, rotating between the extreme eigenspace directions.
DucSample duc_point_for_x(const GraphBasis& b, double x, const SolverConfig& cfg = {});

/// Lower-boundary trace at num_points uniform x targets plus the two exact
/// axis endpoints. For n == 2 the closed boundary circle is emitted
/// directly as 64 parameter samples.
UncertaintyCurve duc_curve(const GraphBasis& b, int num_points, const SolverConfig& cfg = {});

/// ((sum lambda)/n, 0) and (0, L_{0,0}): the only two axis points of the
/// feasibility region.
std::pair<Eigen::Vector2d, Eigen::Vector2d> axis_points(const GraphBasis& b);

struct RegionPoint {
  double x;
  double y;
};

struct FeasibilityRegion {
  UncertaintyCurve lower;
  std::vector<DucSample> upper;  // mirrored trace; m_alpha is the max eigenvalue of K
  std::vector<RegionPoint> witnesses;
  double lambda_max = 0.0;
  double lambda_tilde_0 = 0.0;  // minimal eigenvalue of the modified Laplacian

  // verification summary
  bool in_box = false;        // all points inside [0, lambda_max]^2 (1e-9 slack)
  bool half_plane_ok = false; // min(x + y) >= lambda_tilde_0 - 1e-8
  bool hull_ok = false;       // witnesses inside the boundary hull (1e-6; n >= 3)
  bool midpoints_ok = false;  // witness-pair midpoints achievable (n >= 3)
  bool convex_ok = false;     // lower-boundary slopes nondecreasing (n >= 3)
  bool circle_ok = false;     // n == 2: every point satisfies the circle equation
  double min_x_plus_y = 0.0;
  double max_hull_violation = 0.0;
};

/// Boundary trace (lower and mirrored upper), witness cloud of random unit
/// vectors, and the verification summary over all of them. The upper
/// boundary comes from applying the lower-boundary machinery to the negated
/// operator; it extends the traced lower curve to a closed outline.
FeasibilityRegion feasibility_region(const GraphBasis& b, int num_curve_points, int num_samples,
                                     std::uint64_t seed, const SolverConfig& cfg = {});

}  // namespace guf
