#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "dvtraffic/errors.hpp"
#include "dvtraffic/riemann.hpp"
#include "dvtraffic/schemes.hpp"
#include "dvtraffic/simulation.hpp"
#include "support.hpp"

using namespace dvtraffic;

namespace {

ModelParams params(double H, double eps) {
  ModelParams p;
  p.H = H;
  p.epsilon = eps;
  return p;
}

GridSolution grid(std::size_t n, double H, double eps) {
  return GridSolution(lighthill_whitham(), params(H, eps), 0.0, 1.0, n);
}

GridSolution random_grid(testdata::Sampler& s, std::size_t n, double H, double eps,
                         double rho_max) {
  GridSolution g = grid(n, H, eps);
  for (std::size_t i = 0; i < n; ++i) g.set_cell(i, s.in_triangle(rho_max));
  return g;
}

double z_of(const MacroState& m, double H) { return H * m.q / std::pow(1 - m.rho, H); }

}  // namespace

TEST(Schemes, SystemFluxExamples) {
  const InterfaceFlux f = godunov_flux_system({0.7, 0.7}, {0.7, 0.2}, params(1, 0));
  EXPECT_NEAR(f.rho, 0.35, 1e-14);
  EXPECT_NEAR(f.z, 7.0 / 3.0, 1e-14);
  EXPECT_EQ(godunov_flux_system({0.3, 0.21}, {0.3, 0.21}, params(2, 0)).rho, 0.21);
  EXPECT_EQ(godunov_flux_system({0.3, 0.0}, {0.6, 0.5}, params(1.5, 0)).rho, 0.0);
}

TEST(Schemes, ScalarFluxExamples) {
  const FundamentalDiagram lw = lighthill_whitham();
  EXPECT_NEAR(lax_friedrichs_flux(lw, 1.0, 0.0, 0.5, 1.0), 1.0, 1e-15);
  EXPECT_NEAR(godunov_lwr_flux(lw, 0.3, 0.99), 0.0099, 1e-15);
  EXPECT_EQ(godunov_lwr_flux(lw, 0.99, 0.3), 0.25);
  EXPECT_NEAR(relaxed_flux(lw, 0.3, 0.99), 0.21 * 0.0199 / 0.91, 1e-15);
}

TEST(Schemes, RelaxedStepExample) {
  const std::vector<double> rho{0.3, 0.3, 0.99};
  const std::vector<double> out = step_relaxed(rho, lighthill_whitham(), 0.5, 1.0);
  EXPECT_NEAR(out[1], 0.3 + 0.5 * (0.21 - 0.21 * 0.0199 / 0.91), 1e-14);
  EXPECT_NEAR(out[1], 0.402704, 1e-6);
}

TEST(Schemes, ScalarSteppersKeepConstants) {
  const FundamentalDiagram lw = lighthill_whitham();
  const std::vector<double> rho(20, 0.37);
  for (const auto& out : {step_relaxed(rho, lw, 0.01, 0.05),
                          step_lax_friedrichs(rho, lw, 0.01, 0.05),
                          step_godunov_lwr(rho, lw, 0.01, 0.05)}) {
    for (double r : out) EXPECT_NEAR(r, 0.37, 1e-15);
  }
  EXPECT_THROW(step_relaxed(rho, lw, 0.01, 0.05, ScalarBoundary::periodic()), DomainError);
}

TEST(Schemes, ScalarDirichletFeedsTheEdge) {
  const FundamentalDiagram lw = lighthill_whitham();
  const std::vector<double> rho(10, 0.0);
  const auto out = step_godunov_lwr(rho, lw, 0.05, 0.1, ScalarBoundary::dirichlet(0.5));
  EXPECT_NEAR(out[0], 0.5 * 0.25, 1e-15);
  EXPECT_EQ(out[1], 0.0);
}

TEST(Schemes, GhostStateExample) {
  GridSolution g = grid(4, 1, 0.1);
  for (std::size_t i = 0; i < 4; ++i) g.set_cell(i, {0.2, 0.16});
  BoundarySpec bc;
  bc.left = BoundaryCondition::prescribed(0.75);
  const GhostStates gh = apply_boundary(g, bc);
  EXPECT_NEAR(gh.left.q, 0.75 * 0.96 / 1.75, 1e-14);
  EXPECT_NEAR(gh.left.rho, 0.451429, 1e-6);
  EXPECT_EQ(gh.right, g.cell(3));

  BoundarySpec consistent;
  consistent.right = BoundaryCondition::prescribed(0.2 - 0.16);
  const GhostStates same = apply_boundary(g, consistent);
  EXPECT_NEAR(same.right.rho, 0.2, 1e-14);
  EXPECT_NEAR(same.right.q, 0.16, 1e-14);
}

TEST(Schemes, SingleCellRelaxation) {
  // One cell, outflow on both sides: advection is the identity, so only
  // the implicit Euler substep acts. z* = 2, G(0.5) = 0.5, dt / eps = 1.
  GridSolution g = grid(1, 1, 0.5);
  g.set_cell(0, {0.5, 1.0});
  const GridSolution out = step_relaxation(g, BoundarySpec::outflow(), 0.5);
  EXPECT_NEAR(z_of(out.cell(0), 1), 1.25, 1e-14);
  EXPECT_EQ(out.t, 0.5);
}

TEST(Schemes, StiffRelaxationProjects) {
  GridSolution g = grid(1, 2, 1e-14);
  g.set_cell(0, {0.4, 0.05});
  const GridSolution out = step_relaxation(g, BoundarySpec::outflow(), 0.1);
  EXPECT_NEAR(out.q[0], 0.24, 1e-12);
}

TEST(Schemes, EquilibriumConstantFieldUnchanged) {
  for (double H : {1.0, 2.0}) {
    GridSolution g = grid(50, H, 0.1);
    for (std::size_t i = 0; i < 50; ++i) g.set_cell(i, {0.3, 0.21});
    const GridSolution out = step_relaxation(g, BoundarySpec::outflow(), 0.5 * g.dx());
    for (std::size_t i = 0; i < 50; ++i) {
      EXPECT_NEAR(out.rho[i], 0.3, 1e-15);
      EXPECT_NEAR(out.q[i], 0.21, 1e-15);
    }
  }
}

TEST(Schemes, RejectsCflViolation) {
  GridSolution g = grid(10, 1, 0.1);
  for (std::size_t i = 0; i < 10; ++i) g.set_cell(i, {0.7, 0.7});
  // max |lambda1| = 7/3.
  EXPECT_THROW(step_relaxation(g, BoundarySpec::outflow(), 0.1 / 2.0), CflError);
  EXPECT_NO_THROW(step_relaxation(g, BoundarySpec::outflow(), 0.1 * 3.0 / 7.0));
  EXPECT_THROW(step_relaxation(g, BoundarySpec::outflow(), 0.0), CflError);
}

TEST(Schemes, PeriodicConservation) {
  testdata::Sampler s(41);
  for (double H : {1.0, 2.0}) {
    for (int trial = 0; trial < 20; ++trial) {
      // Dense random data can leave the triangle, and rho - q < 0 then feeds
      // negative densities into the interface states; low densities avoid that.
      GridSolution g = random_grid(s, 64, H, ModelParams::no_relaxation(), 0.2);
      double mass = std::accumulate(g.rho.begin(), g.rho.end(), 0.0);
      double zsum = 0.0;
      for (std::size_t i = 0; i < g.n_cells(); ++i) zsum += z_of(g.cell(i), H);
      for (int step = 0; step < 20; ++step) {
        const double dt = stable_dt(g, BoundarySpec::periodic(), Scheme::relaxation, 1.0);
        g = step_relaxation(g, BoundarySpec::periodic(), dt);
      }
      double zsum_after = 0.0;
      for (std::size_t i = 0; i < g.n_cells(); ++i) zsum_after += z_of(g.cell(i), H);
      EXPECT_NEAR(std::accumulate(g.rho.begin(), g.rho.end(), 0.0), mass, 1e-12);
      EXPECT_NEAR(zsum_after, zsum, 1e-10 * (1 + zsum));
    }
  }
}

TEST(Schemes, RelaxedEqualsKineticAtZeroEpsilon) {
  testdata::Sampler s(42);
  const FundamentalDiagram lw = lighthill_whitham();
  for (int trial = 0; trial < 200; ++trial) {
    GridSolution g = grid(40, 1, 0.0);
    for (std::size_t i = 0; i < 40; ++i) g.set_cell(i, equilibrium(lw, s.uniform(0, 0.99)));
    const double dt = stable_dt(g, BoundarySpec::outflow(), Scheme::relaxation, 1.0);
    const GridSolution kinetic = step_relaxation(g, BoundarySpec::outflow(), dt);
    const std::vector<double> relaxed = step_relaxed(g.rho, lw, dt, g.dx());
    for (std::size_t i = 0; i < 40; ++i) {
      EXPECT_NEAR(kinetic.rho[i], relaxed[i], 1e-14);
      EXPECT_EQ(kinetic.q[i], lw(kinetic.rho[i]));
    }
  }
}

TEST(Schemes, RelaxedSchemeIsMonotone) {
  testdata::Sampler s(43);
  const FundamentalDiagram lw = lighthill_whitham();
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> a(30), b(30);
    for (std::size_t i = 0; i < 30; ++i) {
      a[i] = s.uniform(0, 0.95);
      b[i] = std::min(0.95, a[i] + (s.uniform() < 0.5 ? 0.0 : s.uniform(0, 0.2)));
    }
    // For LW, dG/da = (1 - b + F(b)) / (1 + a)^2 <= 1 and
    // -dG/db = 2ab / (1 + a) <= 1, so dt / dx = 1/2 keeps every weight >= 0.
    const double dx = 1.0 / 30, dt = 0.5 * dx;
    const auto ua = step_relaxed(a, lw, dt, dx), ub = step_relaxed(b, lw, dt, dx);
    for (std::size_t i = 0; i < 30; ++i) EXPECT_LE(ua[i], ub[i] + 1e-15);
  }
}

TEST(Schemes, NonnegativeFluxAndZMaximumPrinciple) {
  testdata::Sampler s(44);
  for (double H : {1.0, 2.0}) {
    for (int trial = 0; trial < 50; ++trial) {
      GridSolution g = random_grid(s, 32, H, ModelParams::no_relaxation(), 0.2);
      for (int step = 0; step < 20; ++step) {
        std::vector<double> z(g.n_cells());
        for (std::size_t i = 0; i < z.size(); ++i) z[i] = z_of(g.cell(i), H);
        const double dt = stable_dt(g, BoundarySpec::outflow(), Scheme::relaxation, 1.0);
        const GridSolution next = step_relaxation(g, BoundarySpec::outflow(), dt);
        for (std::size_t i = 0; i < z.size(); ++i) {
          const double lo = std::min(z[i], z[i == 0 ? 0 : i - 1]);
          const double hi = std::max(z[i], z[i == 0 ? 0 : i - 1]);
          const double zn = z_of(next.cell(i), H);
          EXPECT_GE(zn, lo - 1e-12 * (1 + hi));
          EXPECT_LE(zn, hi + 1e-12 * (1 + hi));
          EXPECT_GE(next.q[i], 0.0);
        }
        g = next;
      }
    }
  }
}

TEST(Schemes, GodunovUpdateIsCellAverageOfFans) {
  // At CFL 1/2 neighbouring fans do not interact within a cell, so the
  // update must equal the average of the exact solution at t = dt.
  testdata::Sampler s(45);
  const int quad = 20000;
  for (double H : {1.0, 2.0}) {
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t n = 12;
      GridSolution g = random_grid(s, n, H, ModelParams::no_relaxation(), 0.9);
      const double dt = stable_dt(g, BoundarySpec::outflow(), Scheme::relaxation, 0.5);
      const GridSolution next = step_relaxation(g, BoundarySpec::outflow(), dt);
      const double dx = g.dx();
      std::vector<RiemannFan> fans;
      for (std::size_t k = 0; k <= n; ++k) {
        const MacroState a = g.cell(k == 0 ? 0 : k - 1), b = g.cell(k == n ? n - 1 : k);
        fans.push_back(solve_riemann_system(a, b, g.params));
      }
      for (std::size_t i = 0; i < n; ++i) {
        // Midpoint rule; its error is at most h times the total variation.
        double rho = 0.0, z = 0.0, tv_rho = 0.0, tv_z = 0.0;
        MacroState prev = fans[i].sample(0.0);
        for (int j = 0; j < quad; ++j) {
          const double u = (j + 0.5) / quad;  // position within the cell
          const MacroState m = u < 0.5 ? fans[i].sample(u * dx / dt)
                                       : fans[i + 1].sample((u - 1) * dx / dt);
          rho += m.rho / quad;
          z += z_of(m, H) / quad;
          tv_rho += std::abs(m.rho - prev.rho);
          tv_z += std::abs(z_of(m, H) - z_of(prev, H));
          prev = m;
        }
        EXPECT_NEAR(next.rho[i], rho, 2 * tv_rho / quad + 1e-12) << "H = " << H << " cell " << i;
        EXPECT_NEAR(z_of(next.cell(i), H), z, 2 * tv_z / quad + 1e-10 * (1 + z)) << "H = " << H;
      }
    }
  }
}
