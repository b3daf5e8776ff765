#include "transforms.hpp"

#include <utility>

namespace guf {

GraphBasis::GraphBasis(Graph g) : graph_(std::move(g)) {
  if (!graph_.connected())
    fail(ErrorCode::Domain, "graph is disconnected; spectral basis requires connectivity");
  laplacian_ = graph_.laplacian();
  normalized_laplacian_ = graph_.normalized_laplacian();
  spectrum_ = sym_eig(laplacian_);
  normalized_spectrum_ = sym_eig(normalized_laplacian_);
  Eigen::VectorXd root_w = graph_.edge_weights().array().sqrt();
  difference_ = root_w.asDiagonal() * graph_.incidence();
  Eigen::VectorXd dinv = graph_.degrees().array().rsqrt();
  normalized_difference_ = difference_ * dinv.asDiagonal();
}

void GraphBasis::check_length(const Signal& f) const {
  if (f.size() != order())
    fail(ErrorCode::Dimension, "signal length " + std::to_string(f.size()) +
                                   " does not match graph order " + std::to_string(order()));
}

Signal GraphBasis::gft(const Signal& f) const {
  check_length(f);
  return spectrum_.vectors.transpose() * f;
}

Signal GraphBasis::igft(const Signal& fhat) const {
  check_length(fhat);
  return spectrum_.vectors * fhat;
}

Signal GraphBasis::ngft(const Signal& f) const {
  check_length(f);
  return normalized_spectrum_.vectors.transpose() * f;
}

Signal GraphBasis::ingft(const Signal& fstar) const {
  check_length(fstar);
  return normalized_spectrum_.vectors * fstar;
}

Eigen::VectorXd GraphBasis::difference(const Signal& f) const {
  check_length(f);
  return difference_ * f;
}

Eigen::VectorXd GraphBasis::normalized_difference(const Signal& f) const {
  check_length(f);
  return normalized_difference_ * f;
}

}  // namespace guf
