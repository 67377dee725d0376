#ifndef DVTRAFFIC_ROOT_FINDING_HPP
#define DVTRAFFIC_ROOT_FINDING_HPP

#include <cmath>
#include <string>

#include "dvtraffic/errors.hpp"

namespace dvtraffic {

inline constexpr double kBisectionTolerance = 1e-12;
inline constexpr int kBisectionMaxIterations = 200;

/// Bisection for a sign change of `f` on [lo, hi].
///
/// Iterates until the bracket is narrower than `tol` *and* no longer shrinks
/// in floating point, or the iteration cap is hit. A zero at either endpoint
/// is returned directly.
template <typename F>
double bisect(F&& f, double lo, double hi, const std::string& what,
              double tol = kBisectionTolerance,
              int max_iter = kBisectionMaxIterations) {
  double f_lo = f(lo);
  double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if ((f_lo < 0.0) == (f_hi < 0.0) || std::isnan(f_lo) || std::isnan(f_hi)) {
    throw RootBracketError(what + ": no sign change", lo, hi);
  }
  for (int it = 0; it < max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  if (hi - lo > tol) {
    throw RootBracketError(what + ": bisection did not converge", lo, hi);
  }
  return 0.5 * (lo + hi);
}

}  // namespace dvtraffic

#endif  // DVTRAFFIC_ROOT_FINDING_HPP
