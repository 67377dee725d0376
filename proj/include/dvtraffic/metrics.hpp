#ifndef DVTRAFFIC_METRICS_HPP
#define DVTRAFFIC_METRICS_HPP

#include <functional>
#include <span>

#include "dvtraffic/grid.hpp"
#include "dvtraffic/riemann.hpp"

namespace dvtraffic {

/// Reference density rho(x, t) on [x_lo, x_hi].
struct ReferenceSolution {
  double x_lo = 0.0;
  double x_hi = 1.0;
  std::function<double(double x, double t)> rho;
};

/// Self-similar references centred at x0 (t > 0 required when sampled).
ReferenceSolution lwr_reference(const LwrFan& fan, double x_lo, double x_hi,
                                double x0);
ReferenceSolution cluster_reference(const ClusterFan& fan, double x_lo,
                                    double x_hi, double x0);
ReferenceSolution system_reference(const RiemannFan& fan, double x_lo,
                                   double x_hi, double x0);

/// sum_i |rho_i - ref(x_i, t)| dx over cell centres.
double l1_error(const GridSolution& profile, const ReferenceSolution& ref,
                double t);
double linf_error(const GridSolution& profile, const ReferenceSolution& ref,
                  double t);

/// Linear interpolation of the unique crossing of `level`. Throws
/// DomainError when the profile crosses zero or several times.
double front_position(std::span<const double> x, std::span<const double> rho,
                      double level);
double front_position(const GridSolution& profile, double level);

}  // namespace dvtraffic

#endif  // DVTRAFFIC_METRICS_HPP
