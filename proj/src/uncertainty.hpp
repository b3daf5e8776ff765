#pragma once

#include <Eigen/Dense>
#include <utility>

#include "transforms.hpp"

namespace guf {

/// Sharp lower/upper constants for the additive difference-energy
/// functional, together with the spectrum of the modified operator they
/// come from (L plus its own diagonalized spectrum, or the normalized
/// analogue).
struct AdditiveBounds {
  double lower;
  double upper;
  Spectrum modified_spectrum;
};

/// d x n matrix E with E E^T = I_d.
class ParsevalFrame {
 public:
  explicit ParsevalFrame(Eigen::MatrixXd e, double tol = 1e-8);

  const Eigen::MatrixXd& matrix() const { return e_; }
  int dim() const { return static_cast<int>(e_.rows()); }
  int size() const { return static_cast<int>(e_.cols()); }

  static double residual(const Eigen::MatrixXd& e);

 private:
  Eigen::MatrixXd e_;
};

enum class FrameSide { Min, Max };

/// L + diag(lambda), or the normalized Laplacian plus diag(mu).
Eigen::MatrixXd modified_operator(const GraphBasis& b, bool normalized = false);

AdditiveBounds additive_bounds(const GraphBasis& b, bool normalized = false);

/// ||D f||^2 + ||D fhat||^2 for the (normalized) difference operator and
/// transform pair. Rejects the zero signal.
double additive_functional(const GraphBasis& b, const Signal& f, bool normalized = false);

/// ||D chi^T E^T||_F^2 + ||D E^T||_F^2.
double frame_objective(const GraphBasis& b, const ParsevalFrame& e, bool normalized = false);

/// Frame built from the first (last) d rows of (chi P)^T, which attains the
/// matching frame bound.
ParsevalFrame extremal_frame(const GraphBasis& b, int d, FrameSide side, bool normalized = false);

/// (sum of the d smallest, sum of the d largest) modified eigenvalues.
std::pair<double, double> frame_bounds(const GraphBasis& b, int d, bool normalized = false);

/// |supp f| * |supp fhat| with entries counted above zero_tol
/// (default 1e-9 * ||f||_inf when zero_tol <= 0).
long support_product(const GraphBasis& b, const Signal& f, double zero_tol = -1.0);

}  // namespace guf
