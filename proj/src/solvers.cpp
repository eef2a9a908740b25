#include "solvers.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "rng.hpp"

namespace refhmc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void check_finite(const Vec& z, Index iter) {
  if (!z.allFinite()) throw divergence_error("solver diverged (non-finite z)", iter);
}

void check_finite(const Mat& M, Index iter) {
  if (!M.allFinite()) throw divergence_error("solver diverged (non-finite factor)", iter);
}

Mat random_gaussian(Index rows, Index cols, Rng& rng) {
  Mat M(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) M(i, j) = cx(rng.normal(), rng.normal());
  return M;
}

/// z-update of Algorithm 1: weighted anti-diagonal average of B off Omega,
/// measurements copied verbatim on Omega.
Vec z_update(const Mat& B, const HankelShape& shape, const std::vector<Index>& support,
             const Vec& obs) {
  ComplexSignal avg = unlift(B, shape);
  for (Index k : support) avg.values[k] = obs[k];
  return std::move(avg.values);
}

double real_inner(const Mat& A, const Mat& B) {
  return (A.conjugate().cwiseProduct(B)).sum().real();
}

}  // namespace

double relative_error(const ComplexSignal& truth, const ComplexSignal& est) {
  return (truth.values - est.values).norm() / truth.values.norm();
}

double convex_objective(const ComplexSignal& z, const HankelShape& shape, const Mat& G,
                        double lambda) {
  Mat Hz = lift(z, shape);
  double nuc = Eigen::JacobiSVD<Mat>(Hz).singularValues().sum();
  return nuc - lambda * real_inner(G, Hz);
}

std::pair<Mat, Mat> lmafit_init(const ComplexSignal& obs, const SampleSet& omega,
                                const HankelShape& shape, Index r, Index iters,
                                std::uint64_t seed) {
  if (r < 1 || r > std::min(shape.rows, shape.cols))
    throw std::invalid_argument("lmafit_init: rank out of range");
  const auto support = omega.distinct();
  ComplexSignal pobs = mask(obs, omega);
  Mat Z = lift(pobs, shape);
  Rng rng(seed);
  Mat U(shape.rows, r);
  Mat V = random_gaussian(shape.cols, r, rng);
  for (Index it = 0; it < iters; ++it) {
    U = Z * V * (V.adjoint() * V).completeOrthogonalDecomposition().pseudoInverse();
    V = Z.adjoint() * U * (U.adjoint() * U).completeOrthogonalDecomposition().pseudoInverse();
    Z = U * V.adjoint();
    // re-pin observed anti-diagonal averages to the measurements
    ComplexSignal s = unlift(Z, shape);
    ComplexSignal corr{shape.dims, Vec::Zero(shape.signal_size())};
    for (Index k : support) corr.values[k] = s.values[k] - pobs.values[k];
    Z -= lift(corr, shape);  // corr is zero off Omega, so only observed anti-diagonals move
    check_finite(Z, it);
  }
  return {U, V};
}

InitState init_factors(const ComplexSignal& obs, const SampleSet& omega,
                       const HankelShape& shape, const ComplexSignal* phi,
                       const SolverConfig& cfg) {
  if (cfg.rank < 1 || cfg.rank > std::min(shape.rows, shape.cols))
    throw std::invalid_argument("init_factors: rank out of range");
  InitState st;
  bool trusted = false;
  if (phi != nullptr) {
    ComplexSignal diff{obs.dims, obs.values - phi->values};
    trusted = mask(diff, omega).values.norm() <= cfg.eps_init;
  }
  if (trusted) {
    Mat Hphi = lift(*phi, shape);
    Eigen::JacobiSVD<Mat> svd(Hphi, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Index r = cfg.rank;
    st.U0 = svd.matrixU().leftCols(r) * svd.singularValues().head(r).asDiagonal();
    st.V0 = svd.matrixV().leftCols(r);
    st.prior.G = svd.matrixU().leftCols(r) * svd.matrixV().leftCols(r).adjoint();
    st.prior.lambda = cfg.lambda;
    st.prior.construction = PriorLift::Construction::kSignOfLift;
    st.trusted = true;
  } else {
    std::tie(st.U0, st.V0) =
        lmafit_init(obs, omega, shape, cfg.rank, cfg.lmafit_iters, cfg.seed);
    st.prior = PriorLift::zero(shape);
    st.trusted = false;
  }
  return st;
}

RecoveryResult admm_recover_with(const ComplexSignal& obs, const SampleSet& omega,
                                 const HankelShape& shape, const InitState& init,
                                 const SolverConfig& cfg) {
  if (obs.dims != shape.dims) throw std::invalid_argument("admm_recover: dims mismatch");
  const auto t0 = Clock::now();
  const auto support = omega.distinct();
  const ComplexSignal pobs = mask(obs, omega);
  // An untrusted init carries a zero prior, in which case the correlation
  // term drops out regardless of lambda (Algorithm 1 line 5).
  const double lam = init.prior.is_zero() ? 0.0 : cfg.lambda;
  const double mu = cfg.mu;
  const Index r = init.U0.cols();

  Mat U = init.U0, V = init.V0;
  Mat Lam = Mat::Zero(shape.rows, shape.cols);
  Vec z = pobs.values;
  const Mat Ir = Mat::Identity(r, r);

  RecoveryResult res;
  res.z.dims = shape.dims;

  auto lagrangian = [&](const Vec& zz, const Mat& UU, const Mat& VV,
                        const Mat& LL) {
    Mat Hzz = lift({shape.dims, zz}, shape);
    Mat UVh = UU * VV.adjoint();
    return 0.5 * (UU.squaredNorm() + VV.squaredNorm()) -
           lam * real_inner(init.prior.G, UVh) +
           0.5 * mu * (Hzz - UVh + LL).squaredNorm();
  };

  Index k = 0;
  bool converged = false;
  while (k < cfg.max_iters) {
    ++k;
    Vec zp = z;
    if (cfg.track_lagrangian)
      res.lagrangian_history.push_back(lagrangian(z, U, V, Lam));
    z = z_update(U * V.adjoint() - Lam, shape, support, pobs.values);
    check_finite(z, k);
    Mat Hz = lift({shape.dims, z}, shape);
    Mat Mt = mu * (Hz + Lam) + lam * init.prior.G;
    U = Mt * V * (Ir + mu * (V.adjoint() * V)).inverse();
    V = Mt.adjoint() * U * (Ir + mu * (U.adjoint() * U)).inverse();
    check_finite(U, k);
    check_finite(V, k);
    Mat UVh = U * V.adjoint();
    Lam += Hz - UVh;

    res.primal_residuals.push_back((Hz - UVh).norm());
    res.objective_history.push_back(0.5 * (U.squaredNorm() + V.squaredNorm()) -
                                    lam * real_inner(init.prior.G, UVh));
    if (cfg.track_lagrangian) {
      // L at (z_k, U_k, V_k) with the multiplier held at Lambda_{k-1}: paired
      // with the entry pushed before the sweep, it witnesses the block descent.
      Mat LamPrev = Lam - (Hz - UVh);
      res.lagrangian_history.push_back(lagrangian(z, U, V, LamPrev));
    }
    if ((z - zp).norm() < cfg.tol) {
      converged = true;
      break;
    }
  }
  res.z.values = std::move(z);
  res.iters = k;
  res.converged = converged;
  res.wall_time = seconds_since(t0);
  return res;
}

RecoveryResult admm_recover(const ComplexSignal& obs, const SampleSet& omega,
                            const HankelShape& shape, const ComplexSignal* phi,
                            const SolverConfig& cfg) {
  InitState st = init_factors(obs, omega, shape, phi, cfg);
  return admm_recover_with(obs, omega, shape, st, cfg);
}

RecoveryResult convex_recover(const ComplexSignal& obs, const SampleSet& omega,
                              const HankelShape& shape, const PriorLift& prior,
                              const std::optional<NoisyData>& noisy,
                              const SolverConfig& cfg) {
  if (obs.dims != shape.dims) throw std::invalid_argument("convex_recover: dims mismatch");
  if (noisy && noisy->delta < 0.0)
    throw std::invalid_argument("convex_recover: delta must be >= 0");
  const auto t0 = Clock::now();
  const auto support = omega.distinct();
  const ComplexSignal pobs = mask(obs, omega);
  const double lam = prior.is_zero() ? 0.0 : cfg.lambda;
  const double rho = cfg.mu;

  Vec z = pobs.values;
  Mat M = lift({shape.dims, z}, shape);
  Mat Lam = Mat::Zero(shape.rows, shape.cols);

  RecoveryResult res;
  res.z.dims = shape.dims;
  Index k = 0;
  bool converged = false;
  while (k < cfg.max_iters) {
    ++k;
    Vec zp = z;
    // z-update
    ComplexSignal avg = unlift(M - Lam, shape);
    z = avg.values;
    if (!noisy) {
      for (Index idx : support) z[idx] = pobs.values[idx];
    } else {
      // project the observed entries onto the Euclidean delta-ball around y
      double distsq = 0.0;
      for (Index idx : support) {
        cx d = z[idx] - noisy->y.values[idx];
        distsq += std::norm(d);
      }
      double dist = std::sqrt(distsq);
      if (dist > noisy->delta) {
        double t = noisy->delta / dist;
        for (Index idx : support)
          z[idx] = noisy->y.values[idx] + t * (z[idx] - noisy->y.values[idx]);
      }
    }
    check_finite(z, k);
    Mat Hz = lift({shape.dims, z}, shape);
    // M-update: SVT at level 1/rho with the prior pull folded in
    Mat C = Hz + Lam + (lam / rho) * prior.G;
    Eigen::JacobiSVD<Mat> svd(C, Eigen::ComputeThinU | Eigen::ComputeThinV);
    Eigen::VectorXd s = svd.singularValues();
    double nuc = 0.0;
    for (Index i = 0; i < s.size(); ++i) {
      s[i] = std::max(s[i] - 1.0 / rho, 0.0);
      nuc += s[i];
    }
    M = svd.matrixU() * s.asDiagonal() * svd.matrixV().adjoint();
    check_finite(M, k);
    Lam += Hz - M;

    const double prim = (Hz - M).norm();
    res.primal_residuals.push_back(prim);
    res.objective_history.push_back(nuc - lam * real_inner(prior.G, M));
    if ((z - zp).norm() < cfg.tol &&
        prim < cfg.tol * std::max(1.0, Hz.norm())) {
      converged = true;
      break;
    }
  }
  res.z.values = std::move(z);
  res.iters = k;
  res.converged = converged;
  res.wall_time = seconds_since(t0);
  return res;
}

}  // namespace refhmc
