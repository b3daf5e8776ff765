#include "uncertainty.hpp"

#include <cmath>
#include <string>

namespace guf {

ParsevalFrame::ParsevalFrame(Eigen::MatrixXd e, double tol) : e_(std::move(e)) {
  if (e_.rows() < 1 || e_.rows() > e_.cols())
    fail(ErrorCode::InvalidArgument, "Parseval frame needs 1 <= d <= n");
  double r = residual(e_);
  if (r > tol)
    fail(ErrorCode::InvalidArgument,
         "matrix is not a Parseval frame: |EE^T - I| = " + std::to_string(r));
}

double ParsevalFrame::residual(const Eigen::MatrixXd& e) {
  Eigen::MatrixXd gram = e * e.transpose();
  gram.diagonal().array() -= 1.0;
  return gram.cwiseAbs().maxCoeff();
}

Eigen::MatrixXd modified_operator(const GraphBasis& b, bool normalized) {
  Eigen::MatrixXd m = normalized ? b.normalized_laplacian() : b.laplacian();
  const Eigen::VectorXd& values =
      normalized ? b.normalized_spectrum().values : b.laplacian_spectrum().values;
  m.diagonal() += values;
  return m;
}

AdditiveBounds additive_bounds(const GraphBasis& b, bool normalized) {
  Spectrum s = sym_eig(modified_operator(b, normalized));
  AdditiveBounds out{s.values(0), s.values(s.values.size() - 1), std::move(s)};
  if (!(out.lower > 0.0))
    fail(ErrorCode::Numeric, "modified spectrum is not positive; connectivity violated?");
  return out;
}

double additive_functional(const GraphBasis& b, const Signal& f, bool normalized) {
  if (f.size() != b.order()) fail(ErrorCode::Dimension, "signal length mismatch");
  if (f.isZero(0.0)) fail(ErrorCode::InvalidArgument, "additive functional needs a nonzero signal");
  if (normalized)
    return b.normalized_difference(f).squaredNorm() +
           b.normalized_difference(b.ngft(f)).squaredNorm();
  return b.difference(f).squaredNorm() + b.difference(b.gft(f)).squaredNorm();
}

double frame_objective(const GraphBasis& b, const ParsevalFrame& e, bool normalized) {
  if (e.size() != b.order())
    fail(ErrorCode::Dimension, "frame has " + std::to_string(e.size()) +
                                   " columns, graph order is " + std::to_string(b.order()));
  const Eigen::MatrixXd& diff = normalized ? b.normalized_difference_op() : b.difference_op();
  const Eigen::MatrixXd& basis =
      normalized ? b.normalized_spectrum().vectors : b.laplacian_spectrum().vectors;
  Eigen::MatrixXd et = e.matrix().transpose();
  return (diff * (basis.transpose() * et)).squaredNorm() + (diff * et).squaredNorm();
}

ParsevalFrame extremal_frame(const GraphBasis& b, int d, FrameSide side, bool normalized) {
  const int n = b.order();
  if (d < 2 || d > n)
    fail(ErrorCode::InvalidArgument, "frame dimension d must satisfy 2 <= d <= n");
  Spectrum modified = sym_eig(modified_operator(b, normalized));
  const Eigen::MatrixXd& basis =
      normalized ? b.normalized_spectrum().vectors : b.laplacian_spectrum().vectors;
  Eigen::MatrixXd u = basis * modified.vectors;
  Eigen::MatrixXd e = side == FrameSide::Min ? u.leftCols(d).transpose()
                                             : u.rightCols(d).transpose();
  return ParsevalFrame(std::move(e));
}

std::pair<double, double> frame_bounds(const GraphBasis& b, int d, bool normalized) {
  const int n = b.order();
  if (d < 2 || d > n)
    fail(ErrorCode::InvalidArgument, "frame dimension d must satisfy 2 <= d <= n");
  AdditiveBounds ab = additive_bounds(b, normalized);
  double lower = ab.modified_spectrum.values.head(d).sum();
  double upper = ab.modified_spectrum.values.tail(d).sum();
  return {lower, upper};
}

long support_product(const GraphBasis& b, const Signal& f, double zero_tol) {
  if (f.size() != b.order()) fail(ErrorCode::Dimension, "signal length mismatch");
  if (f.isZero(0.0)) fail(ErrorCode::InvalidArgument, "support product needs a nonzero signal");
  double tol = zero_tol > 0.0 ? zero_tol : 1e-9 * f.cwiseAbs().maxCoeff();
  Signal fhat = b.gft(f);
  long vertex_support = (f.cwiseAbs().array() > tol).count();
  long spectral_support = (fhat.cwiseAbs().array() > tol).count();
  return vertex_support * spectral_support;
}

}  // namespace guf
