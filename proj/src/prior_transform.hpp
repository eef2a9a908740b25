#pragma once

#include "hankel_ops.hpp"
#include "types.hpp"

namespace refhmc {

/// Lifted prior G(phi) with its correlation weight. `construction` records
/// whether G came from the sign of the lifted reference or is identically
/// zero (in which case the recovery programs reduce to plain Hankel
/// completion).
struct PriorLift {
  enum class Construction { kSignOfLift, kZero };
  Mat G;
  double lambda = 0.0;
  Construction construction = Construction::kZero;

  static PriorLift zero(const HankelShape& shape) {
    return {Mat::Zero(shape.rows, shape.cols), 0.0, Construction::kZero};
  }
  bool is_zero() const { return construction == Construction::kZero; }
};

/// sgn(X) = U V^H over singular values > rank_tol * sigma_max. Throws on X = 0.
Mat sign_matrix(const Mat& X, double rank_tol = 1e-10);

/// G = U_(r) V_(r)^H from the rank-r truncated SVD of lift(phi), with lambda
/// recorded. The r-SVD (rather than a machine-precision compact SVD) keeps
/// noise subspaces of a perturbed reference out of G.
PriorLift build_prior_lift(const ComplexSignal& phi, const HankelShape& shape,
                           double lambda, Index r);

/// lambda* = Re<P_T(sgn[H(x)]), G> / ||P_T(G)||_F^2 — the weight minimizing
/// ||F0||_F. Needs the ground truth, so this is a diagnostic.
double optimal_lambda(const ComplexSignal& x, const Mat& G, const HankelShape& shape);

}  // namespace refhmc
