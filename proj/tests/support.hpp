#ifndef DVTRAFFIC_TESTS_SUPPORT_HPP
#define DVTRAFFIC_TESTS_SUPPORT_HPP

#include <random>

#include "dvtraffic/state.hpp"

namespace dvtraffic::testdata {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo = 0.0, double hi = 1.0) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  /// Uniform rho in [0, rho_max], q uniform in [0, rho].
  MacroState in_triangle(double rho_max = 0.99) {
    const double rho = uniform(0.0, rho_max);
    return {rho, uniform(0.0, 1.0) * rho};
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace dvtraffic::testdata

#endif  // DVTRAFFIC_TESTS_SUPPORT_HPP
