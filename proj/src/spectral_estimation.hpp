#pragma once

#include <stdexcept>
#include <vector>

#include "signal_model.hpp"
#include "types.hpp"

namespace refhmc {

/// Estimated line spectrum: frequency vectors sorted lexicographically, the
/// matching complex amplitudes, and the relative model-fit residual
/// ||x - synth(estimate)|| / ||x||.
struct FrequencyEstimate {
  std::vector<std::vector<double>> freqs;
  std::vector<cx> amps;
  double residual = 0.0;
};

/// Raised when the 2-D pair selection cannot be resolved; carries the
/// per-dimension candidate frequencies.
class pairing_error : public std::runtime_error {
 public:
  pairing_error(const std::string& what, std::vector<double> f1, std::vector<double> f2)
      : std::runtime_error(what), cand_f1(std::move(f1)), cand_f2(std::move(f2)) {}
  std::vector<double> cand_f1, cand_f2;
};

/// 1-D matrix pencil: Hankel-lift with `pencil` columns (default floor(n/2)),
/// rank-r SVD truncation, shift-invariance eigenproblem for e^{i2pi f}, then
/// least-squares amplitudes against the Vandermonde matrix.
/// Requires n >= 2r+1 and pencil in [r, n-r].
FrequencyEstimate matrix_pencil(const ComplexSignal& x, Index r, Index pencil = 0);

/// 2-D estimation: per-dimension matrix pencil on aggregated slices, then pair
/// selection by greedy least-squares amplitude fit over the candidate grid.
/// Requires both dims >= 2r+1.
FrequencyEstimate estimate_2d(const ComplexSignal& x, Index r);

/// Rebuild the signal a FrequencyEstimate describes on the given dims.
ComplexSignal synthesize_estimate(const FrequencyEstimate& est, const std::vector<Index>& dims);

}  // namespace refhmc
