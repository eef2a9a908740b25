#pragma once

#include <optional>

#include "hankel_ops.hpp"
#include "signal_model.hpp"
#include "types.hpp"

namespace refhmc {

/// Row/column spaces of H(x) from its compact SVD; T is the associated
/// tangent subspace {U A^H + B V^H}.
struct TangentSpace {
  Mat U;  // rows x r, orthonormal columns
  Mat V;  // cols x r, orthonormal columns

  Index rank() const { return U.cols(); }
};

/// Compact SVD of M truncated at rel_tol * sigma_max.
TangentSpace tangent_space(const Mat& M, double rel_tol = 1e-10);
/// Truncated at exactly rank r.
TangentSpace tangent_space_rank(const Mat& M, Index r);

/// P_T(M) = UU^H M + M VV^H - UU^H M VV^H, or its complement.
Mat tangent_project(const Mat& M, const TangentSpace& T, bool complement = false);

/// Smallest mu with max_i ||U^H e_i||^2 <= mu r / n1 and the V analogue.
double incoherence(const TangentSpace& T);

/// (||M||_{A,inf}, ||M||_{A,2}); the basis spectral norms ||A_k|| are computed
/// from the basis matrices, not assumed.
std::pair<double, double> a_norms(const Mat& M, const HankelShape& shape);

struct CertificateReport {
  double cond_12_value = 0.0;  // || P_T A P_T - (n/m) P_T A_Omega P_T ||
  bool cond_13 = false;        // A'_{Omega_perp}(W) = 0 (checked numerically)
  double cond_14_value = 0.0;  // || P_T(sgn - W - lambda G) ||_F, threshold 1/(7n)
  double cond_15_value = 0.0;  // || P_{T_perp}(W + lambda G) ||, threshold 1/2
  Index j0 = 0;
  bool passed = false;         // all four Lemma-2 hypotheses
};

struct DiagnosticsReport {
  double mu = 0.0;
  double cs = 0.0;
  double F0_norm = 0.0;      // ||F0||_F
  double F0_Ainf = 0.0;
  double F0_A2 = 0.0;
  double delta = 0.0;        // 4(||F0||_{A,2}+||F0||_{A,inf}) / (1 - 2||P_Tperp(lambda G)||)
  bool delta_valid = true;   // false when the denominator is <= 0
  double pt_perp_G = 0.0;    // ||P_{T_perp}(lambda G)||
  bool hypothesis_ok = false;  // pt_perp_G < 1/2
  double lambda_star = 0.0;
  double j0_real = 0.0;        // max(ln(7 n ||F0||_F), 1), natural log
  double m_bound_upto_constant = 0.0;  // c=1, log^alpha per variant
  double m_bound_wrap = 0.0;           // the alpha=1 (wrap-around) form, reported alongside
  std::optional<CertificateReport> certificate;
};

/// All Theorem 1 / Theorem 3 quantities for ground truth x, reference phi
/// (empty => zero prior), and weight lambda. G is the rank-r sign of lift(phi).
DiagnosticsReport theorem1_report(const ComplexSignal& x, const ComplexSignal* phi,
                                  double lambda, const HankelShape& shape);

/// Golfing-scheme dual certificate W from the batched multiset Omega, checked
/// against Lemma 2's hypotheses. Omega is split into j0 consecutive batches of
/// ceil(m/j0); the tail batch is padded by cycling from the start of Omega.
/// j0 defaults to max(ceil(ln(7 n ||F0||_F)), 1). Throws if m < j0.
CertificateReport golfing_certificate(const ComplexSignal& x, const Mat& G, double lambda,
                                      const SampleSet& omega, const HankelShape& shape,
                                      std::optional<Index> j0 = std::nullopt);

/// || P_T A P_T - (n/m) P_T A_Omega P_T ||, by explicit matricization of the
/// operator on an orthonormal basis of T (dimension r(n1+n2-r)).
double lemma1_concentration(const TangentSpace& T, const SampleSet& omega,
                            const HankelShape& shape);

}  // namespace refhmc
