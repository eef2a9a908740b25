#include "prior_transform.hpp"

#include <Eigen/SVD>
#include <stdexcept>

#include "theory_diagnostics.hpp"

namespace refhmc {

Mat sign_matrix(const Mat& X, double rank_tol) {
  if (X.norm() == 0.0) throw std::invalid_argument("sign_matrix: zero matrix");
  Eigen::JacobiSVD<Mat> svd(X, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  Index keep = 0;
  while (keep < s.size() && s[keep] > rank_tol * s[0]) ++keep;
  return svd.matrixU().leftCols(keep) * svd.matrixV().leftCols(keep).adjoint();
}

PriorLift build_prior_lift(const ComplexSignal& phi, const HankelShape& shape,
                           double lambda, Index r) {
  if (phi.dims != shape.dims)
    throw std::invalid_argument("build_prior_lift: dims mismatch");
  if (r < 1 || r > std::min(shape.rows, shape.cols))
    throw std::invalid_argument("build_prior_lift: rank out of range");
  Mat H = lift(phi, shape);
  Eigen::JacobiSVD<Mat> svd(H, Eigen::ComputeThinU | Eigen::ComputeThinV);
  PriorLift out;
  out.G = svd.matrixU().leftCols(r) * svd.matrixV().leftCols(r).adjoint();
  out.lambda = lambda;
  out.construction = PriorLift::Construction::kSignOfLift;
  return out;
}

double optimal_lambda(const ComplexSignal& x, const Mat& G, const HankelShape& shape) {
  if (G.norm() == 0.0) throw std::invalid_argument("optimal_lambda: G is zero");
  Mat Hx = lift(x, shape);
  TangentSpace T = tangent_space(Hx);
  Mat S = sign_matrix(Hx);
  Mat PtG = tangent_project(G, T);
  const double denom = PtG.squaredNorm();
  if (denom == 0.0) throw std::invalid_argument("optimal_lambda: P_T(G) is zero");
  // Re<P_T(sgn), G> = Re<sgn, P_T(G)> since P_T is self-adjoint and fixes sgn.
  const double num = (S.conjugate().cwiseProduct(PtG)).sum().real();
  return num / denom;
}

}  // namespace refhmc
