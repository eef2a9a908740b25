#pragma once

#include <limits>
#include <optional>

#include "hankel_ops.hpp"
#include "prior_transform.hpp"
#include "signal_model.hpp"
#include "types.hpp"

namespace refhmc {

/// Tunables shared by the factorized ADMM and the convex reference solver.
/// `mu` is the ADMM penalty (the augmented-Lagrangian coupling weight), not
/// the incoherence parameter. `eps_init` is the prior-trust threshold on
/// ||P_Omega(x - phi)||_2; a reference failing it falls back to LMaFit
/// initialization with a zero prior.
struct SolverConfig {
  double lambda = 1.0;
  double mu = 1.0;
  Index rank = 0;  // must be set for the factorized solver
  Index max_iters = 500;
  double tol = 1e-8;
  double eps_init = std::numeric_limits<double>::infinity();
  std::uint64_t seed = 0;
  Index lmafit_iters = 60;
  bool track_lagrangian = false;  // record the augmented Lagrangian per sweep

  static SolverConfig admm_defaults() { return {}; }
  static SolverConfig convex_defaults() {
    SolverConfig c;
    c.max_iters = 5000;
    c.tol = 1e-10;
    return c;
  }
};

struct RecoveryResult {
  ComplexSignal z;
  Index iters = 0;
  std::vector<double> primal_residuals;   // ||H(z) - UV^H||_F (or ||H(z)-M||_F)
  std::vector<double> objective_history;  // solver objective per iteration
  // (pre-sweep, post-sweep) pairs of the augmented Lagrangian per iteration,
  // both at the sweep's incoming multiplier; filled when track_lagrangian is set
  std::vector<double> lagrangian_history;
  bool converged = false;
  double wall_time = 0.0;
};

struct InitState {
  Mat U0;
  Mat V0;
  PriorLift prior;
  bool trusted = false;
};

/// Algorithm 1 lines 2-6: trust the reference if ||P_Omega(obs - phi)|| <= eps,
/// in which case (U0, V0) come from the r-SVD of H(phi) and G = U_(r) V_(r)^H;
/// otherwise LMaFit factors and a zero prior.
InitState init_factors(const ComplexSignal& obs, const SampleSet& omega,
                       const HankelShape& shape, const ComplexSignal* phi,
                       const SolverConfig& cfg);

/// Alternating least squares on min 1/2 ||UV^H - Z||_F^2 with the observed
/// anti-diagonal averages of Z pinned to the measurements. Fixed iteration
/// count; Gaussian V0 from cfg.seed.
std::pair<Mat, Mat> lmafit_init(const ComplexSignal& obs, const SampleSet& omega,
                                const HankelShape& shape, Index r, Index iters,
                                std::uint64_t seed);

/// Algorithm 1 with a given initialization.
RecoveryResult admm_recover_with(const ComplexSignal& obs, const SampleSet& omega,
                                 const HankelShape& shape, const InitState& init,
                                 const SolverConfig& cfg);

/// Algorithm 1 end to end (init_factors + iteration).
RecoveryResult admm_recover(const ComplexSignal& obs, const SampleSet& omega,
                            const HankelShape& shape, const ComplexSignal* phi,
                            const SolverConfig& cfg);

struct NoisyData {
  ComplexSignal y;  // noisy observation (full-length, only Omega entries used)
  double delta = 0.0;
};

/// Convex reference solver by operator splitting: the lifted variable M is
/// updated by singular-value thresholding of H(z) + Lambda + (lambda/mu) G at
/// level 1/mu, and z by the same weighted anti-diagonal average as the
/// factorized solver (equality-constrained) or with the observed entries
/// projected onto the delta-ball around y (noisy program). Solves
///   min ||H(z)||_* - lambda Re<G, H(z)>
/// which matches the objective Algorithm 1's closed-form updates minimize.
RecoveryResult convex_recover(const ComplexSignal& obs, const SampleSet& omega,
                              const HankelShape& shape, const PriorLift& prior,
                              const std::optional<NoisyData>& noisy,
                              const SolverConfig& cfg);

/// ||H(z)||_* - lambda Re<G, H(z)>: the convex objective both solvers target.
double convex_objective(const ComplexSignal& z, const HankelShape& shape, const Mat& G,
                        double lambda);

double relative_error(const ComplexSignal& truth, const ComplexSignal& est);

}  // namespace refhmc
