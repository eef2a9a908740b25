#include "hankel_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace refhmc {

std::vector<Index> default_pencils(const std::vector<Index>& dims) {
  std::vector<Index> p(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) p[i] = dims[i] / 2 + 1;
  return p;
}

HankelShape make_shape(const std::vector<Index>& dims, const std::vector<Index>& pencils,
                       HankelShape::Variant variant) {
  if (dims.empty() || dims.size() != pencils.size())
    throw std::invalid_argument("make_shape: dims/pencils arity mismatch");
  const std::size_t d = dims.size();
  for (std::size_t l = 0; l < d; ++l) {
    if (dims[l] <= 0) throw std::invalid_argument("make_shape: nonpositive dim");
    if (pencils[l] < 1 || pencils[l] > dims[l])
      throw std::invalid_argument("make_shape: pencil outside [1, N]");
  }
  HankelShape s;
  s.dims = dims;
  s.pencils = pencils;
  s.variant = variant;
  const bool wrap = variant == HankelShape::Variant::kWrapAround;
  std::vector<Index> rdims(d), cdims(d);
  for (std::size_t l = 0; l < d; ++l) {
    rdims[l] = wrap ? dims[l] : dims[l] - pencils[l] + 1;
    cdims[l] = pencils[l];
  }
  s.rows = product(rdims);
  s.cols = product(cdims);

  const Index n = product(dims);
  s.positions.assign(n, {});
  std::vector<Index> iv(d, 0), jv(d, 0);
  // signal strides: row-major over dims (last coordinate fastest)
  std::vector<Index> sstride(d);
  {
    Index acc = 1;
    for (std::size_t l = d; l-- > 0;) {
      sstride[l] = acc;
      acc *= dims[l];
    }
  }
  for (Index row = 0; row < s.rows; ++row) {
    std::fill(jv.begin(), jv.end(), 0);
    for (Index col = 0; col < s.cols; ++col) {
      Index k = 0;
      for (std::size_t l = 0; l < d; ++l) {
        Index e = iv[l] + jv[l];
        if (wrap) e %= dims[l];
        k += e * sstride[l];
      }
      s.positions[k].emplace_back(row, col);
      // advance column multi-index, dimension 1 fastest
      for (std::size_t l = 0; l < d; ++l) {
        if (++jv[l] < cdims[l]) break;
        jv[l] = 0;
      }
    }
    for (std::size_t l = 0; l < d; ++l) {
      if (++iv[l] < rdims[l]) break;
      iv[l] = 0;
    }
  }
  s.weights.resize(n);
  for (Index k = 0; k < n; ++k) {
    s.weights[k] = static_cast<Index>(s.positions[k].size());
    if (s.weights[k] == 0)
      throw std::logic_error("make_shape: uncovered signal index");
  }
  return s;
}

Mat lift(const ComplexSignal& x, const HankelShape& shape) {
  if (x.dims != shape.dims) throw std::invalid_argument("lift: dims mismatch");
  Mat M(shape.rows, shape.cols);
  for (Index k = 0; k < shape.signal_size(); ++k)
    for (auto [i, j] : shape.positions[k]) M(i, j) = x.values[k];
  return M;
}

ComplexSignal unlift(const Mat& M, const HankelShape& shape) {
  if (M.rows() != shape.rows || M.cols() != shape.cols)
    throw std::invalid_argument("unlift: matrix size mismatch");
  ComplexSignal out{shape.dims, Vec(shape.signal_size())};
  for (Index k = 0; k < shape.signal_size(); ++k) {
    cx s = 0.0;
    for (auto [i, j] : shape.positions[k]) s += M(i, j);
    out.values[k] = s / static_cast<double>(shape.weights[k]);
  }
  return out;
}

ComplexSignal lift_adjoint(const Mat& M, const HankelShape& shape) {
  if (M.rows() != shape.rows || M.cols() != shape.cols)
    throw std::invalid_argument("lift_adjoint: matrix size mismatch");
  ComplexSignal out{shape.dims, Vec(shape.signal_size())};
  for (Index k = 0; k < shape.signal_size(); ++k) {
    cx s = 0.0;
    for (auto [i, j] : shape.positions[k]) s += M(i, j);
    out.values[k] = s;
  }
  return out;
}

Mat basis_matrix(Index k, const HankelShape& shape) {
  if (k < 0 || k >= shape.signal_size())
    throw std::invalid_argument("basis_matrix: index out of range");
  Mat A = Mat::Zero(shape.rows, shape.cols);
  const double v = 1.0 / std::sqrt(static_cast<double>(shape.weights[k]));
  for (auto [i, j] : shape.positions[k]) A(i, j) = v;
  return A;
}

Mat hankel_project(const Mat& X, const HankelShape& shape, bool complement) {
  if (X.rows() != shape.rows || X.cols() != shape.cols)
    throw std::invalid_argument("hankel_project: matrix size mismatch");
  Mat P = Mat::Zero(shape.rows, shape.cols);
  for (Index k = 0; k < shape.signal_size(); ++k) {
    cx s = 0.0;
    for (auto [i, j] : shape.positions[k]) s += X(i, j);
    s /= static_cast<double>(shape.weights[k]);
    for (auto [i, j] : shape.positions[k]) P(i, j) = s;
  }
  return complement ? (X - P).eval() : P;
}

Mat sampling_op_batch(const Mat& X, const std::vector<Index>& batch,
                      const HankelShape& shape) {
  Mat out = Mat::Zero(shape.rows, shape.cols);
  for (Index k : batch) {
    cx s = 0.0;
    for (auto [i, j] : shape.positions[k]) s += X(i, j);
    s /= static_cast<double>(shape.weights[k]);  // <X, A_k> / sqrt(w_k)
    for (auto [i, j] : shape.positions[k]) out(i, j) += s;
  }
  return out;
}

Mat sampling_op(const Mat& X, const SampleSet& omega, const HankelShape& shape,
                bool weighted) {
  if (X.rows() != shape.rows || X.cols() != shape.cols)
    throw std::invalid_argument("sampling_op: matrix size mismatch");
  if (omega.dims != shape.dims)
    throw std::invalid_argument("sampling_op: omega dims mismatch");
  return sampling_op_batch(X, weighted ? omega.indices : omega.distinct(), shape);
}

}  // namespace refhmc
