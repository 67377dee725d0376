#include <gtest/gtest.h>

#include <vector>

#include "dvtraffic/errors.hpp"
#include "dvtraffic/metrics.hpp"
#include "dvtraffic/riemann.hpp"

using namespace dvtraffic;

namespace {

GridSolution grid(std::size_t n, double x_lo = 0.0, double x_hi = 1.0) {
  return GridSolution(lighthill_whitham(), ModelParams{}, x_lo, x_hi, n);
}

}  // namespace

TEST(Metrics, SampledReferenceHasZeroError) {
  const LwrFan fan = solve_riemann_lwr(lighthill_whitham(), 0.99, 0.0);
  const ReferenceSolution ref = lwr_reference(fan, 0.0, 1.0, 0.5);
  GridSolution g = grid(400);
  for (std::size_t i = 0; i < 400; ++i) g.rho[i] = ref.rho(g.x_center(i), 0.3);
  EXPECT_EQ(l1_error(g, ref, 0.3), 0.0);
  EXPECT_EQ(linf_error(g, ref, 0.3), 0.0);
}

TEST(Metrics, ConstantOffset) {
  const ReferenceSolution ref{-1.0, 2.0, [](double, double) { return 0.25; }};
  GridSolution g = grid(300, -1.0, 2.0);
  for (double& r : g.rho) r = 0.25 + 0.125;
  EXPECT_NEAR(l1_error(g, ref, 1.0), 0.125 * 3.0, 1e-12);
  EXPECT_NEAR(linf_error(g, ref, 1.0), 0.125, 1e-15);
}

TEST(Metrics, DomainMismatch) {
  const ReferenceSolution ref{0.0, 2.0, [](double, double) { return 0.0; }};
  EXPECT_THROW(l1_error(grid(10), ref, 1.0), DomainError);
  EXPECT_THROW(l1_error(grid(10), ReferenceSolution{}, 1.0), DomainError);
}

TEST(Metrics, ClusterAndSystemReferences) {
  const ClusterFan c = solve_riemann_cluster({0.7, 0.7}, {0.7, 0.2});
  const ReferenceSolution rc = cluster_reference(c, 0, 1, 0.5);
  EXPECT_EQ(rc.rho(0.3, 0.2), 0.7);
  EXPECT_EQ(rc.rho(0.5, 0.2), 1.0);
  EXPECT_EQ(rc.rho(0.75, 0.2), 0.7);
  ModelParams p;
  const RiemannFan f = solve_riemann_system({0.7, 0.7}, {0.7, 0.2}, p);
  const ReferenceSolution rf = system_reference(f, 0, 1, 0.5);
  EXPECT_NEAR(rf.rho(0.6, 0.2), 0.85, 1e-14);
}

TEST(Metrics, FrontOfExactStep) {
  GridSolution g = grid(1000);
  for (std::size_t i = 0; i < 1000; ++i) g.rho[i] = g.x_center(i) < 0.384 ? 0.3 : 0.99;
  EXPECT_NEAR(front_position(g, 0.645), 0.384, g.dx());
}

TEST(Metrics, FrontOfLinearRamp) {
  const std::vector<double> x{0.0, 0.25, 0.5, 0.75, 1.0};
  const std::vector<double> rho{1.0, 0.75, 0.5, 0.25, 0.0};
  EXPECT_DOUBLE_EQ(front_position(x, rho, 0.5), 0.5);
  EXPECT_DOUBLE_EQ(front_position(x, rho, 0.6), 0.4);
}

TEST(Metrics, FrontErrors) {
  const std::vector<double> x{0.0, 0.5, 1.0};
  EXPECT_THROW(front_position(x, std::vector<double>{0.2, 0.2, 0.2}, 0.5), DomainError);
  EXPECT_THROW(front_position(x, std::vector<double>{0.2, 0.8, 0.2}, 0.5), DomainError);
  EXPECT_THROW(front_position(x, std::vector<double>{0.2, 0.8}, 0.5), DomainError);
}
