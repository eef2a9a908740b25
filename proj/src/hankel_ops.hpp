#pragma once

#include <utility>
#include <vector>

#include "signal_model.hpp"
#include "types.hpp"

namespace refhmc {

/// Lifting geometry. The lifted matrix has
///   rows = prod_k (N_k - n_k + 1)   (standard; rows = prod N_k for wrap-around)
///   cols = prod_k n_k
/// and entry (i, j) holds the signal value whose per-dimension index is
/// i_l + j_l (mod N_l for wrap-around). Row multi-indices are flattened with
/// dimension 1 fastest, matching the recursive block-Hankel construction; the
/// signal itself is flat row-major (last dimension fastest).
///
/// For every flat signal index k, `positions[k]` lists the (row, col) pairs of
/// the lifted matrix mapping to k, and weights[k] = |positions[k]| is the
/// anti-diagonal multiplicity. Weights are obtained by this enumeration, never
/// from a closed form.
struct HankelShape {
  enum class Variant { kStandard, kWrapAround };

  std::vector<Index> dims;     // N_1..N_d
  std::vector<Index> pencils;  // n_1..n_d (1-D: the pencil parameter d)
  Variant variant = Variant::kStandard;
  Index rows = 0;
  Index cols = 0;
  std::vector<Index> weights;
  std::vector<std::vector<std::pair<Index, Index>>> positions;

  Index signal_size() const { return product(dims); }
};

/// Near-square default: n_k = floor(N_k/2) + 1 per dimension.
std::vector<Index> default_pencils(const std::vector<Index>& dims);

HankelShape make_shape(const std::vector<Index>& dims, const std::vector<Index>& pencils,
                       HankelShape::Variant variant = HankelShape::Variant::kStandard);

inline HankelShape make_shape(const std::vector<Index>& dims,
                              HankelShape::Variant variant = HankelShape::Variant::kStandard) {
  return make_shape(dims, default_pencils(dims), variant);
}

/// H(x): place x on the (generalized) anti-diagonals.
Mat lift(const ComplexSignal& x, const HankelShape& shape);

/// H†(M): weighted anti-diagonal average; exact left inverse of lift.
ComplexSignal unlift(const Mat& M, const HankelShape& shape);

/// H*(M): plain anti-diagonal sums (the adjoint of lift under the Frobenius
/// pairing); H† = W^{-1} ∘ H*.
ComplexSignal lift_adjoint(const Mat& M, const HankelShape& shape);

/// A_k = H(e_k)/sqrt(w_k): unit-Frobenius basis element on anti-diagonal k.
Mat basis_matrix(Index k, const HankelShape& shape);

/// A(X) = sum_k <X, A_k> A_k = lift(unlift(X)): projection onto the lifted
/// (block-Hankel) subspace. With complement=true returns X - A(X).
Mat hankel_project(const Mat& X, const HankelShape& shape, bool complement = false);

/// weighted=true : A_Omega(X) = sum over the multiset (repeats accumulate);
/// weighted=false: A'_Omega(X) over distinct indices (an orthogonal projection).
Mat sampling_op(const Mat& X, const SampleSet& omega, const HankelShape& shape,
                bool weighted);

/// Same as sampling_op(weighted) but over an explicit index batch (used by the
/// golfing scheme on sub-multisets of Omega).
Mat sampling_op_batch(const Mat& X, const std::vector<Index>& batch,
                      const HankelShape& shape);

}  // namespace refhmc
