#include "rng.hpp"

#include "error.hpp"

namespace guf {

Eigen::VectorXd random_unit_vector(Rng& rng, int n) {
  if (n < 1) fail(ErrorCode::InvalidArgument, "random_unit_vector: n must be positive");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::VectorXd v(n);
  double norm = 0.0;
  while (norm == 0.0) {
    for (int j = 0; j < n; ++j) v(j) = gauss(rng);
    norm = v.norm();
  }
  return v / norm;
}

Eigen::MatrixXd random_parseval_frame(Rng& rng, int d, int n) {
  if (d < 1 || d > n) fail(ErrorCode::InvalidArgument, "random_parseval_frame: need 1 <= d <= n");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd g(n, d);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < d; ++k) g(j, k) = gauss(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, d);
  return q.transpose();
}

}  // namespace guf
