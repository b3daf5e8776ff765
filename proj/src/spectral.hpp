#pragma once

#include <Eigen/Dense>

#include "error.hpp"

namespace guf {

/// Ascending eigenvalues with an aligned orthonormal column basis.
struct Spectrum {
  Eigen::VectorXd values;
  Eigen::MatrixXd vectors;
};

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
///
/// The output is deterministic for identical input: sweeps run in a fixed
/// (p, q) order, eigenvalues are stable-sorted ascending, and each
/// eigenvector is flipped so its largest-magnitude entry (lowest index on
/// ties) is positive. Convergence is declared when the off-diagonal
/// Frobenius norm drops below 1e-12 times the Frobenius norm of the input;
/// the sweep cap is 100.
Spectrum sym_eig(const Eigen::MatrixXd& m, double symmetry_tol = 1e-10);

/// <v, Mv> / <v, v>. Rejects the zero vector.
double rayleigh(const Eigen::MatrixXd& m, const Eigen::VectorXd& v);

/// Relative clustering tolerance: 1e-8 * max(1, |lambda|_max).
double default_mult_tol(const Eigen::VectorXd& values);

/// Columns spanning every eigenvector whose value lies within mult_tol of
/// the target. Fails if no eigenvalue is that close.
Eigen::MatrixXd eigenspace_basis(const Spectrum& s, double target, double mult_tol);

}  // namespace guf
