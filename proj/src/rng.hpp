#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

namespace guf {

using Rng = std::mt19937_64;

/// Gaussian direction normalized to unit length.
Eigen::VectorXd random_unit_vector(Rng& rng, int n);

/// d x n matrix with orthonormal rows, built by orthonormalizing the rows
/// of a Gaussian matrix.
Eigen::MatrixXd random_parseval_frame(Rng& rng, int d, int n);

}  // namespace guf
