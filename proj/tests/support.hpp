#pragma once

// Shared helpers for the test suites: a deterministic graph corpus, random
// signals, and small oracles that stay independent of the code under test.

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "rng.hpp"

namespace testsupport {

inline guf::Graph random_connected_graph(guf::Rng& rng, int n) {
  std::uniform_real_distribution<double> weight(0.5, 2.0);
  std::vector<guf::Edge> edges;
  std::set<std::pair<int, int>> used;
  for (int v = 1; v < n; ++v) {
    int u = static_cast<int>(rng() % v);
    edges.push_back({u, v, weight(rng)});
    used.insert({u, v});
  }
  for (int tries = 0; tries < n; ++tries) {
    int u = static_cast<int>(rng() % n);
    int v = static_cast<int>(rng() % n);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (!used.insert({u, v}).second) continue;
    edges.push_back({u, v, weight(rng)});
  }
  return guf::Graph(n, std::move(edges));
}

/// P_N, C_N, K_N for N in [3, 16] plus `random_count` random connected
/// weighted graphs, reproducible from the seed.
inline std::vector<guf::Graph> standard_corpus(int random_count = 20,
                                               std::uint64_t seed = 12345) {
  std::vector<guf::Graph> corpus;
  for (int n = 3; n <= 16; ++n) {
    corpus.push_back(guf::path_graph(n));
    corpus.push_back(guf::cycle_graph(n));
    corpus.push_back(guf::complete_graph(n));
  }
  guf::Rng rng(seed);
  for (int k = 0; k < random_count; ++k) {
    int n = 3 + static_cast<int>(rng() % 14);
    corpus.push_back(random_connected_graph(rng, n));
  }
  return corpus;
}

/// Root of a continuous function on a sign-changing interval, by bisection.
inline double bisect_root(const std::function<double(double)>& f, double a, double b) {
  double fa = f(a);
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (a + b);
    double fm = f(mid);
    if (fa * fm <= 0.0) {
      b = mid;
    } else {
      a = mid;
      fa = fm;
    }
  }
  return 0.5 * (a + b);
}

inline double spread_of(const Eigen::VectorXd& lam, const Eigen::VectorXd& g) {
  return (lam.array() * g.array().square()).sum();
}

/// Random unit vector whose diag(lam) quadratic form is driven to x by
/// blending toward a coordinate direction (intermediate value theorem on
/// the blend parameter). lam must be ascending with lam(0) <= x <= lam(n-1).
inline Eigen::VectorXd matched_spread_vector(guf::Rng& rng, const Eigen::VectorXd& lam,
                                             double x, double x_tol) {
  const int n = static_cast<int>(lam.size());
  Eigen::VectorXd h = guf::random_unit_vector(rng, n);
  double xh = spread_of(lam, h);
  if (std::abs(xh - x) <= x_tol) return h;
  Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
  v(x < xh ? 0 : n - 1) = 1.0;
  if (h.dot(v) < 0.0) h = -h;
  double lo = 0.0, hi = 1.0;
  Eigen::VectorXd g = h;
  for (int i = 0; i < 200; ++i) {
    double t = 0.5 * (lo + hi);
    g = ((1.0 - t) * h + t * v).normalized();
    double xg = spread_of(lam, g);
    if (std::abs(xg - x) <= x_tol) return g;
    // spread is continuous in t; keep the sub-interval whose endpoints straddle x
    if ((xg - x) * (xh - x) > 0.0) {
      lo = t;
      xh = xg;
    } else {
      hi = t;
    }
  }
  return g;
}

}  // namespace testsupport
