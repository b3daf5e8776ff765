#include "graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

namespace guf {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 2) fail(ErrorCode::Parse, "graph needs at least 2 vertices, got " + std::to_string(n_));
  for (Edge& e : edges_) {
    if (e.u == e.v)
      fail(ErrorCode::Parse, "loop edge at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n_)
      fail(ErrorCode::Parse, "vertex index out of range: (" + std::to_string(e.u) + ", " +
                                 std::to_string(e.v) + ")");
    if (!(e.w > 0.0))
      fail(ErrorCode::Parse, "edge weight must be positive, got " + std::to_string(e.w));
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k - 1].u == edges_[k].u && edges_[k - 1].v == edges_[k].v)
      fail(ErrorCode::Parse, "duplicate edge (" + std::to_string(edges_[k].u) + ", " +
                                 std::to_string(edges_[k].v) + ")");
  }
}

bool Graph::unit_weighted() const {
  return std::all_of(edges_.begin(), edges_.end(), [](const Edge& e) { return e.w == 1.0; });
}

bool Graph::connected() const {
  std::vector<std::vector<int>> adj(n_);
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> seen(n_, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    for (int next : adj[queue[head]]) {
      if (!seen[next]) {
        seen[next] = 1;
        queue.push_back(next);
      }
    }
  }
  return static_cast<int>(queue.size()) == n_;
}

Eigen::MatrixXd Graph::adjacency() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
  for (const Edge& e : edges_) {
    a(e.u, e.v) = e.w;
    a(e.v, e.u) = e.w;
  }
  return a;
}

// Row sums of the adjacency matrix, summed in column order so the result
// is bit-identical to adjacency().rowwise().sum().
Eigen::VectorXd Graph::degrees() const {
  return adjacency().rowwise().sum();
}

Eigen::MatrixXd Graph::incidence() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(edge_count(), n_);
  for (int k = 0; k < edge_count(); ++k) {
    m(k, edges_[k].u) = 1.0;
    m(k, edges_[k].v) = -1.0;
  }
  return m;
}

Eigen::VectorXd Graph::edge_weights() const {
  Eigen::VectorXd w(edge_count());
  for (int k = 0; k < edge_count(); ++k) w(k) = edges_[k].w;
  return w;
}

Eigen::MatrixXd Graph::laplacian() const {
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(n_, n_);
  for (const Edge& e : edges_) {
    l(e.u, e.u) += e.w;
    l(e.v, e.v) += e.w;
    l(e.u, e.v) -= e.w;
    l(e.v, e.u) -= e.w;
  }
  return l;
}

Eigen::MatrixXd Graph::normalized_laplacian() const {
  Eigen::VectorXd d = degrees();
  for (int j = 0; j < n_; ++j) {
    if (d(j) <= 0.0)
      fail(ErrorCode::Domain, "degenerate degree at vertex " + std::to_string(j) +
                                  "; normalized Laplacian undefined");
  }
  Eigen::VectorXd dinv = d.array().rsqrt();
  Eigen::MatrixXd nl = Eigen::MatrixXd::Identity(n_, n_);
  for (const Edge& e : edges_) {
    double value = e.w * dinv(e.u) * dinv(e.v);
    nl(e.u, e.v) -= value;
    nl(e.v, e.u) -= value;
  }
  return nl;
}

namespace {

bool parse_int(const std::string& token, int& out) {
  try {
    size_t pos = 0;
    long value = std::stol(token, &pos);
    if (pos != token.size()) return false;
    if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max())
      return false;
    out = static_cast<int>(value);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

bool parse_double(const std::string& token, double& out) {
  try {
    size_t pos = 0;
    out = std::stod(token, &pos);
    return pos == token.size() && std::isfinite(out);
  } catch (const std::exception&) {
    return false;
  }
}

[[noreturn]] void line_fail(int line, const std::string& message) {
  fail(ErrorCode::Parse, "line " + std::to_string(line) + ": " + message);
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  std::vector<Edge> edges;
  std::vector<int> edge_lines;
  int max_index = -1;
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (size_t hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string token; fields >> token;) tokens.push_back(token);
    if (tokens.empty()) continue;
    if (tokens.size() < 2 || tokens.size() > 3)
      line_fail(line_no, "expected 'u v [w]', got " + std::to_string(tokens.size()) + " fields");
    int u, v;
    if (!parse_int(tokens[0], u) || !parse_int(tokens[1], v))
      line_fail(line_no, "invalid vertex index");
    if (u < 0 || v < 0) line_fail(line_no, "vertex index out of range");
    double w = 1.0;
    if (tokens.size() == 3 && !parse_double(tokens[2], w))
      line_fail(line_no, "invalid edge weight");
    if (u == v) line_fail(line_no, "loop edge at vertex " + std::to_string(u));
    if (!(w > 0.0)) line_fail(line_no, "edge weight must be positive");
    if (u > v) std::swap(u, v);
    for (const Edge& e : edges) {
      if (e.u == u && e.v == v)
        line_fail(line_no, "duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    edges.push_back({u, v, w});
    edge_lines.push_back(line_no);
    max_index = std::max(max_index, v);
  }
  if (max_index < 1)
    fail(ErrorCode::Parse, "edge list describes fewer than 2 vertices");
  return Graph(max_index + 1, std::move(edges));
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
  return Graph(n, std::move(edges));
}

Graph path_graph(int n, double weight) {
  std::vector<Edge> edges;
  for (int u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1, weight});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n, double weight) {
  if (n < 3) fail(ErrorCode::Parse, "cycle graph needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int u = 0; u + 1 < n; ++u) edges.push_back({u, u + 1, weight});
  edges.push_back({0, n - 1, weight});
  return Graph(n, std::move(edges));
}

}  // namespace guf
