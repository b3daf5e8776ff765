#include "complete_graph.hpp"

#include <cmath>
#include <string>

namespace guf::kn {

namespace {

void check_order(int n) {
  if (n < 3) fail(ErrorCode::Domain, "complete-graph closed forms need n >= 3");
}

// (n(alpha+1) - 2)^2 + 4(n-1); positive for every real alpha, checked anyway.
double radical(int n, double alpha) {
  double base = n * (alpha + 1.0) - 2.0;
  double r = base * base + 4.0 * (n - 1.0);
  if (!(r > 0.0)) fail(ErrorCode::Numeric, "degenerate radical in complete-graph closed form");
  return std::sqrt(r);
}

}  // namespace

double lambda_min(int n, double alpha) {
  check_order(n);
  return -(-n * (alpha + 1.0) + radical(n, alpha)) / 2.0 - alpha * n;
}

double x_of_alpha(int n, double alpha) {
  check_order(n);
  return (2.0 - n * (alpha + 1.0) + radical(n, alpha)) / 2.0;
}

std::pair<double, double> duc_point(int n, double alpha) {
  check_order(n);
  double s = x_of_alpha(n, alpha);
  double denom = s * s + (n - 1.0);
  double x = n * (n - 1.0) / denom;
  double y = (s - 1.0) * (s - 1.0) * (n - 1.0) / denom;
  return {x, y};
}

Eigenstructure eigenstructure(int n, double alpha) {
  check_order(n);
  if (alpha == 0.0)
    fail(ErrorCode::Domain, "eigenstructure requires alpha != 0 (the middle eigenvalue merges)");
  double r = radical(n, alpha);
  double shift = 1.0 - alpha * n;
  double a = shift - (2.0 - n * (alpha + 1.0) + r) / 2.0;
  double b = shift - (2.0 - n * (alpha + 1.0) - r) / 2.0;
  return {n * (1.0 - alpha), n - 2, a, b};
}

Bounds additive_bounds(int n) {
  check_order(n);
  return {n - std::sqrt(static_cast<double>(n)), 2.0 * n};
}

double frame_lower(int n, int d) {
  check_order(n);
  if (d < 2 || d > n) fail(ErrorCode::InvalidArgument, "frame dimension d must satisfy 2 <= d <= n");
  return 2.0 * n * (d - 1.0);
}

}  // namespace guf::kn
