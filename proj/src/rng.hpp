#pragma once

#include <cstdint>
#include <random>

namespace refhmc {

/// Seedable 64-bit generator used everywhere randomness is needed.
///
/// The raw stream is std::mt19937_64, whose output sequence is fixed by the
/// standard, so draws are identical across platforms and compilers. Derived
/// variates use fixed algorithms (documented below) rather than the
/// implementation-defined std distributions:
///   - uniform_index(n): multiply-shift reduction (x * n) >> 64 of a raw draw;
///   - uniform01(): 53-bit mantissa draw in [0, 1);
///   - normal(): Box-Muller on (u1, u2) with u1 in (0, 1], pairs cached.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t uniform_index(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  /// Uniform double in [0, 1).
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Standard normal variate.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform01();  // (0, 1]
    double u2 = uniform01();
    double rad = std::sqrt(-2.0 * std::log(u1));
    double ang = 6.283185307179586476925286766559 * u2;
    spare_ = rad * std::sin(ang);
    have_spare_ = true;
    return rad * std::cos(ang);
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// splitmix64 mixing step, used to derive independent per-trial seeds from a
/// base seed and trial coordinates.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c = 0);

}  // namespace refhmc
