#include "signal_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace refhmc {

void SpectralModel::validate() const {
  if (dims.empty()) throw std::invalid_argument("SpectralModel: dims empty");
  for (Index d : dims)
    if (d <= 0) throw std::invalid_argument("SpectralModel: nonpositive dim");
  if (terms.empty()) throw std::invalid_argument("SpectralModel: no terms");
  for (const auto& t : terms) {
    if (t.freq.size() != dims.size())
      throw std::invalid_argument("SpectralModel: frequency arity mismatch");
    for (double f : t.freq)
      if (!(f >= 0.0 && f < 1.0))
        throw std::invalid_argument("SpectralModel: frequency outside [0,1)");
  }
  for (std::size_t a = 0; a < terms.size(); ++a)
    for (std::size_t b = a + 1; b < terms.size(); ++b)
      if (terms[a].freq == terms[b].freq)
        throw std::invalid_argument("SpectralModel: duplicated frequency vector");
}

void ComplexSignal::validate() const {
  if (values.size() != product(dims))
    throw std::invalid_argument("ComplexSignal: value count != prod(dims)");
}

void SampleSet::validate() const {
  const Index n = product(dims);
  for (Index k : indices)
    if (k < 0 || k >= n) throw std::invalid_argument("SampleSet: index out of range");
  if (law == Law::kNoReplacement) {
    std::set<Index> s(indices.begin(), indices.end());
    if (static_cast<Index>(s.size()) != m())
      throw std::invalid_argument("SampleSet: duplicates under no-replacement law");
  }
}

std::vector<Index> SampleSet::distinct() const {
  std::vector<Index> d(indices);
  std::sort(d.begin(), d.end());
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

ComplexSignal synthesize(const SpectralModel& model) {
  model.validate();
  const Index n = model.size();
  const std::size_t d = model.dims.size();
  ComplexSignal out{model.dims, Vec::Zero(n)};
  std::vector<Index> idx(d, 0);
  constexpr double two_pi = 2.0 * std::numbers::pi;
  for (Index k = 0; k < n; ++k) {
    cx v = 0.0;
    for (const auto& t : model.terms) {
      double phase = 0.0;
      for (std::size_t j = 0; j < d; ++j) phase += static_cast<double>(idx[j]) * t.freq[j];
      v += t.amp * std::polar(1.0, two_pi * phase);
    }
    out.values[k] = v;
    // advance row-major multi-index (last coordinate fastest)
    for (std::size_t j = d; j-- > 0;) {
      if (++idx[j] < model.dims[j]) break;
      idx[j] = 0;
    }
  }
  return out;
}

SampleSet draw_samples(const std::vector<Index>& dims, Index m, SampleSet::Law law,
                       std::uint64_t seed) {
  const Index n = product(dims);
  if (m < 1) throw std::invalid_argument("draw_samples: m must be >= 1");
  SampleSet out;
  out.dims = dims;
  out.law = law;
  Rng rng(seed);
  if (law == SampleSet::Law::kIid) {
    out.indices.resize(m);
    for (Index i = 0; i < m; ++i)
      out.indices[i] = static_cast<Index>(rng.uniform_index(static_cast<std::uint64_t>(n)));
  } else {
    if (m > n)
      throw std::invalid_argument("draw_samples: m > prod(dims) without replacement");
    // partial Fisher-Yates over 0..n-1
    std::vector<Index> pool(n);
    for (Index i = 0; i < n; ++i) pool[i] = i;
    for (Index i = 0; i < m; ++i) {
      Index j = i + static_cast<Index>(rng.uniform_index(static_cast<std::uint64_t>(n - i)));
      std::swap(pool[i], pool[j]);
    }
    out.indices.assign(pool.begin(), pool.begin() + m);
  }
  return out;
}

ComplexSignal mask(const ComplexSignal& x, const SampleSet& omega) {
  if (x.dims != omega.dims) throw std::invalid_argument("mask: dims mismatch");
  ComplexSignal out{x.dims, Vec::Zero(x.size())};
  for (Index k : omega.distinct()) out.values[k] = x.values[k];
  return out;
}

ComplexSignal make_prior(const ComplexSignal& x, double sigma, std::uint64_t seed) {
  if (!std::isfinite(sigma)) throw std::invalid_argument("make_prior: sigma must be finite");
  ComplexSignal out{x.dims, x.values};
  Rng rng(seed);
  for (Index k = 0; k < x.size(); ++k) {
    double re = rng.normal();
    double im = rng.normal();
    out.values[k] += sigma * cx(re, im);
  }
  return out;
}

}  // namespace refhmc
