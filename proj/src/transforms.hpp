#pragma once

#include <Eigen/Dense>

#include "graph.hpp"
#include "spectral.hpp"

namespace guf {

using Signal = Eigen::VectorXd;

/// Per-graph spectral context shared by every downstream computation:
/// eigendecompositions of both Laplacians plus the difference operators.
/// Immutable after construction; requires a connected graph.
class GraphBasis {
 public:
  explicit GraphBasis(Graph g);

  const Graph& graph() const { return graph_; }
  int order() const { return graph_.order(); }

  const Eigen::MatrixXd& laplacian() const { return laplacian_; }
  const Eigen::MatrixXd& normalized_laplacian() const { return normalized_laplacian_; }
  const Spectrum& laplacian_spectrum() const { return spectrum_; }
  const Spectrum& normalized_spectrum() const { return normalized_spectrum_; }
  double lambda_max() const { return spectrum_.values(order() - 1); }

  /// W^{1/2} M: weighted difference across each edge.
  const Eigen::MatrixXd& difference_op() const { return difference_; }
  /// W^{1/2} M D^{-1/2}: difference operator matching the normalized
  /// Laplacian factorization.
  const Eigen::MatrixXd& normalized_difference_op() const { return normalized_difference_; }

  Signal gft(const Signal& f) const;
  Signal igft(const Signal& fhat) const;
  Signal ngft(const Signal& f) const;
  Signal ingft(const Signal& fstar) const;
  Eigen::VectorXd difference(const Signal& f) const;
  Eigen::VectorXd normalized_difference(const Signal& f) const;

 private:
  void check_length(const Signal& f) const;

  Graph graph_;
  Eigen::MatrixXd laplacian_;
  Eigen::MatrixXd normalized_laplacian_;
  Spectrum spectrum_;
  Spectrum normalized_spectrum_;
  Eigen::MatrixXd difference_;
  Eigen::MatrixXd normalized_difference_;
};

}  // namespace guf
