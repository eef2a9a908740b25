#pragma once

#include <cstdint>
#include <vector>

#include "rng.hpp"
#include "types.hpp"

namespace refhmc {

/// Ground-truth description of a spectrally sparse signal: a superposition of
/// r complex sinusoids with frequency vectors in [0,1)^d.
struct SpectralModel {
  struct Term {
    std::vector<double> freq;  // one coordinate per dimension
    cx amp;
  };
  std::vector<Index> dims;  // N_1..N_d
  std::vector<Term> terms;

  Index size() const { return product(dims); }
  /// Throws std::invalid_argument on an invariant violation (empty terms,
  /// coordinates outside [0,1), duplicated frequency vectors).
  void validate() const;
};

/// A d-way complex tensor stored flat in row-major order (last index fastest).
struct ComplexSignal {
  std::vector<Index> dims;
  Vec values;

  Index size() const { return values.size(); }
  void validate() const;
};

/// Observation index multiset over flat indices in [0, prod(dims)).
struct SampleSet {
  enum class Law { kIid, kNoReplacement };
  std::vector<Index> dims;
  std::vector<Index> indices;  // multiset; order is meaningful for batching
  Law law = Law::kNoReplacement;

  Index m() const { return static_cast<Index>(indices.size()); }
  void validate() const;
  /// Sorted distinct support of the multiset.
  std::vector<Index> distinct() const;
};

/// Evaluate the model: entry (k_1..k_d) = sum_l amp_l exp(i 2 pi sum_j k_j f_{j,l}).
ComplexSignal synthesize(const SpectralModel& model);

/// Draw m flat indices per the given law; reproducible from the seed.
SampleSet draw_samples(const std::vector<Index>& dims, Index m, SampleSet::Law law,
                       std::uint64_t seed);

/// Keep entries on the distinct support of omega, zero elsewhere.
ComplexSignal mask(const ComplexSignal& x, const SampleSet& omega);

/// phi = x + sigma*noise with Re/Im of each noise entry i.i.d. N(0,1); the
/// entries are filled in flat-index order, real part before imaginary part.
ComplexSignal make_prior(const ComplexSignal& x, double sigma, std::uint64_t seed);

}  // namespace refhmc
