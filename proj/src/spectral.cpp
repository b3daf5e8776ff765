#include "spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace guf {

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& a) {
  double sum = 0.0;
  for (int p = 0; p < a.rows(); ++p)
    for (int q = p + 1; q < a.cols(); ++q) sum += 2.0 * a(p, q) * a(p, q);
  return std::sqrt(sum);
}

void apply_sign_convention(Eigen::MatrixXd& vectors) {
  for (int k = 0; k < vectors.cols(); ++k) {
    int lead = 0;
    double best = std::abs(vectors(0, k));
    for (int j = 1; j < vectors.rows(); ++j) {
      double mag = std::abs(vectors(j, k));
      if (mag > best) {
        best = mag;
        lead = j;
      }
    }
    if (vectors(lead, k) < 0.0) vectors.col(k) = -vectors.col(k);
  }
}

}  // namespace

Spectrum sym_eig(const Eigen::MatrixXd& m, double symmetry_tol) {
  const int n = static_cast<int>(m.rows());
  if (n == 0 || m.cols() != n) fail(ErrorCode::Dimension, "sym_eig expects a square matrix");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > symmetry_tol * scale)
    fail(ErrorCode::InvalidArgument, "matrix is not symmetric within tolerance");

  Eigen::MatrixXd a = m;
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double threshold = 1e-12 * m.norm();
  const int max_sweeps = 100;

  bool converged = off_diagonal_norm(a) <= threshold;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = theta >= 0.0 ? 1.0 / (theta + std::sqrt(1.0 + theta * theta))
                                      : -1.0 / (-theta + std::sqrt(1.0 + theta * theta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (int j = 0; j < n; ++j) {
          if (j == p || j == q) continue;
          const double ajp = a(j, p);
          const double ajq = a(j, q);
          a(j, p) = a(p, j) = c * ajp - s * ajq;
          a(j, q) = a(q, j) = s * ajp + c * ajq;
        }
        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (int j = 0; j < n; ++j) {
          const double vjp = v(j, p);
          const double vjq = v(j, q);
          v(j, p) = c * vjp - s * vjq;
          v(j, q) = s * vjp + c * vjq;
        }
      }
    }
    converged = off_diagonal_norm(a) <= threshold;
  }
  if (!converged) fail(ErrorCode::Numeric, "Jacobi sweep cap reached before convergence");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&a](int i, int j) { return a(i, i) < a(j, j); });

  Spectrum out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (int k = 0; k < n; ++k) {
    out.values(k) = a(order[k], order[k]);
    out.vectors.col(k) = v.col(order[k]);
  }
  apply_sign_convention(out.vectors);
  return out;
}

double rayleigh(const Eigen::MatrixXd& m, const Eigen::VectorXd& v) {
  if (v.size() != m.rows()) fail(ErrorCode::Dimension, "rayleigh: vector length mismatch");
  const double nn = v.squaredNorm();
  if (nn == 0.0) fail(ErrorCode::InvalidArgument, "rayleigh: zero vector");
  return v.dot(m * v) / nn;
}

double default_mult_tol(const Eigen::VectorXd& values) {
  double top = values.size() ? values.cwiseAbs().maxCoeff() : 0.0;
  return 1e-8 * std::max(1.0, top);
}

Eigen::MatrixXd eigenspace_basis(const Spectrum& s, double target, double mult_tol) {
  std::vector<int> picked;
  for (int k = 0; k < s.values.size(); ++k)
    if (std::abs(s.values(k) - target) <= mult_tol) picked.push_back(k);
  if (picked.empty())
    fail(ErrorCode::Domain, "no eigenvalue within mult_tol of target " + std::to_string(target));
  Eigen::MatrixXd basis(s.vectors.rows(), picked.size());
  for (size_t k = 0; k < picked.size(); ++k) basis.col(k) = s.vectors.col(picked[k]);
  return basis;
}

}  // namespace guf
