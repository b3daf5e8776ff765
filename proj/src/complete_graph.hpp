#pragma once

#include <utility>

#include "error.hpp"

namespace guf::kn {

/// Closed forms for the unit-weighted complete graph on n >= 3 vertices,
/// where L = n I - O and the pencil K(alpha) = L - alpha * diag(spectrum)
/// reduces to a rank-one bordered block.

/// Minimal eigenvalue of K(alpha).
double lambda_min(int n, double alpha);

/// Leading coordinate of the eigenvector [x(alpha), 1, ..., 1] attached to
/// the minimal eigenvalue.
double x_of_alpha(int n, double alpha);

/// Point of the lower feasibility boundary (an ellipse arc) reached at a
/// given alpha.
std::pair<double, double> duc_point(int n, double alpha);

struct Eigenstructure {
  double middle;            // n (1 - alpha)
  int middle_multiplicity;  // n - 2
  double outlier_a;
  double outlier_b;
};

/// Eigenvalue layout of K(alpha) for alpha != 0.
Eigenstructure eigenstructure(int n, double alpha);

struct Bounds {
  double additive_lower;  // n - sqrt(n)
  double additive_upper;  // 2 n
};

Bounds additive_bounds(int n);

/// 2 n (d - 1): lower frame bound specialization.
double frame_lower(int n, int d);

}  // namespace guf::kn
