#include "dvtraffic/metrics.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "dvtraffic/errors.hpp"

namespace dvtraffic {

namespace {

void require_same_domain(const GridSolution& profile, const ReferenceSolution& ref) {
  constexpr double tol = 1e-12;
  if (std::abs(profile.x_lo - ref.x_lo) > tol || std::abs(profile.x_hi - ref.x_hi) > tol) {
    throw DomainError("profile domain [" + std::to_string(profile.x_lo) + ", " +
                      std::to_string(profile.x_hi) + "] does not match reference [" +
                      std::to_string(ref.x_lo) + ", " + std::to_string(ref.x_hi) + "]");
  }
  if (!ref.rho) throw DomainError("reference solution is empty");
}

}  // namespace

ReferenceSolution lwr_reference(const LwrFan& fan, double x_lo, double x_hi,
                                double x0) {
  return {x_lo, x_hi, [fan, x0](double x, double t) { return fan.sample((x - x0) / t); }};
}

ReferenceSolution cluster_reference(const ClusterFan& fan, double x_lo,
                                    double x_hi, double x0) {
  return {x_lo, x_hi,
          [fan, x0](double x, double t) { return fan.sample((x - x0) / t).rho; }};
}

ReferenceSolution system_reference(const RiemannFan& fan, double x_lo,
                                   double x_hi, double x0) {
  return {x_lo, x_hi,
          [fan, x0](double x, double t) { return fan.sample((x - x0) / t).rho; }};
}

double l1_error(const GridSolution& profile, const ReferenceSolution& ref,
                double t) {
  require_same_domain(profile, ref);
  double sum = 0.0;
  for (std::size_t i = 0; i < profile.n_cells(); ++i) {
    sum += std::abs(profile.rho[i] - ref.rho(profile.x_center(i), t));
  }
  return sum * profile.dx();
}

double linf_error(const GridSolution& profile, const ReferenceSolution& ref,
                  double t) {
  require_same_domain(profile, ref);
  double m = 0.0;
  for (std::size_t i = 0; i < profile.n_cells(); ++i) {
    m = std::max(m, std::abs(profile.rho[i] - ref.rho(profile.x_center(i), t)));
  }
  return m;
}

double front_position(std::span<const double> x, std::span<const double> rho,
                      double level) {
  if (x.size() != rho.size() || x.size() < 2) {
    throw DomainError("front_position: need matching x and rho with >= 2 points");
  }
  int crossings = 0;
  double position = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    if ((rho[i] < level) == (rho[i + 1] < level)) continue;
    ++crossings;
    position = x[i] + (level - rho[i]) / (rho[i + 1] - rho[i]) * (x[i + 1] - x[i]);
  }
  if (crossings != 1) {
    throw DomainError("front_position: profile crosses level " + std::to_string(level) +
                      " " + std::to_string(crossings) + " times");
  }
  return position;
}

double front_position(const GridSolution& profile, double level) {
  std::vector<double> x(profile.n_cells());
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = profile.x_center(i);
  return front_position(x, profile.rho, level);
}

}  // namespace dvtraffic
