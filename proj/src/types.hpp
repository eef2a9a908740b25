#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace refhmc {

using cx = std::complex<double>;
using Index = std::int64_t;
using Vec = Eigen::VectorXcd;
using Mat = Eigen::MatrixXcd;

/// Thrown when an iterative solver produces non-finite values.
class divergence_error : public std::runtime_error {
 public:
  divergence_error(const std::string& what, Index iteration)
      : std::runtime_error(what), iteration_(iteration) {}
  Index iteration() const { return iteration_; }

 private:
  Index iteration_;
};

inline Index product(const std::vector<Index>& dims) {
  Index p = 1;
  for (Index d : dims) p *= d;
  return p;
}

}  // namespace refhmc
