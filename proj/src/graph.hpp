#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "error.hpp"

namespace guf {

struct Edge {
  int u;     // smaller endpoint
  int v;     // larger endpoint
  double w;  // strictly positive weight
};

/// Simple weighted undirected graph with a fixed vertex ordering.
/// Edges are stored once with u < v and sorted lexicographically; that
/// order is also the row order of the incidence matrix.
class Graph {
 public:
  Graph(int vertex_count, std::vector<Edge> edges);

  int order() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool unit_weighted() const;
  bool connected() const;

  Eigen::MatrixXd adjacency() const;
  Eigen::VectorXd degrees() const;       // diagonal of the degree matrix
  Eigen::MatrixXd incidence() const;     // |E| x n, +1 at the smaller endpoint
  Eigen::VectorXd edge_weights() const;  // diagonal of W in edge order
  Eigen::MatrixXd laplacian() const;     // D - A
  Eigen::MatrixXd normalized_laplacian() const;  // I - D^{-1/2} A D^{-1/2}

 private:
  int n_;
  std::vector<Edge> edges_;
};

/// Parses the plain edge-list format: one "u v [w]" triple per line,
/// 0-based vertex indices, weight defaulting to 1. '#' starts a comment.
/// The vertex count is inferred as 1 + max index.
Graph parse_edge_list(const std::string& text);

Graph complete_graph(int n);
Graph path_graph(int n, double weight = 1.0);
Graph cycle_graph(int n, double weight = 1.0);

}  // namespace guf
