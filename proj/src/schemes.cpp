#include "dvtraffic/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dvtraffic/errors.hpp"
#include "dvtraffic/riemann.hpp"

namespace dvtraffic {

namespace {

constexpr double kCflSlack = 1e-12;

double ghost_value(std::span<const double> rho, ScalarBoundary bc, bool left) {
  switch (bc.kind) {
    case ScalarBoundary::Kind::outflow:
      return left ? rho.front() : rho.back();
    case ScalarBoundary::Kind::periodic:
      return left ? rho.back() : rho.front();
    case ScalarBoundary::Kind::dirichlet:
      return bc.value;
  }
  return 0.0;
}

template <typename Flux>
std::vector<double> conservative_update(std::span<const double> rho, double dt,
                                        double dx, ScalarBoundary left,
                                        ScalarBoundary right, Flux&& flux) {
  if ((left.kind == ScalarBoundary::Kind::periodic) !=
      (right.kind == ScalarBoundary::Kind::periodic)) {
    throw DomainError("periodic boundaries must be set on both sides");
  }
  const std::size_t n = rho.size();
  std::vector<double> interface(n + 1);
  const double ghost_l = ghost_value(rho, left, true);
  const double ghost_r = ghost_value(rho, right, false);
  for (std::size_t k = 0; k <= n; ++k) {
    const double a = k == 0 ? ghost_l : rho[k - 1];
    const double b = k == n ? ghost_r : rho[k];
    interface[k] = flux(a, b);
  }
  const double nu = dt / dx;
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = rho[i] - nu * (interface[i + 1] - interface[i]);
  }
  return out;
}

}  // namespace

InterfaceFlux godunov_flux_system(const MacroState& left, const MacroState& right,
                                  const ModelParams& params) {
  const MacroState mid = interface_state(left, right, params);
  return {mid.q, to_conservative(left, params).z};
}

GhostStates apply_boundary(const GridSolution& sol, const BoundarySpec& bc,
                           const ModelParams& params) {
  bc.validate();
  const std::size_t n = sol.n_cells();
  const MacroState first = sol.cell(0);
  const MacroState last = sol.cell(n - 1);
  GhostStates g{first, last};
  switch (bc.left.kind) {
    case BoundaryCondition::Kind::outflow:
      break;
    case BoundaryCondition::Kind::periodic:
      g.left = last;
      break;
    case BoundaryCondition::Kind::prescribed:
      g.left = state_from_invariants(bc.left.value, first.f1(), params);
      break;
  }
  switch (bc.right.kind) {
    case BoundaryCondition::Kind::outflow:
      break;
    case BoundaryCondition::Kind::periodic:
      g.right = first;
      break;
    case BoundaryCondition::Kind::prescribed:
      g.right = state_from_invariants(to_conservative(last, params).z,
                                      bc.right.value, params);
      break;
  }
  return g;
}

double max_lambda1(const GridSolution& sol) {
  double m = 0.0;
  for (std::size_t i = 0; i < sol.n_cells(); ++i) {
    m = std::max(m, std::abs(eigenstructure(sol.cell(i), sol.params).lambda1));
  }
  return m;
}

GridSolution step_relaxation(const GridSolution& sol, const BoundarySpec& bc,
                             double dt) {
  const ModelParams& p = sol.params;
  const std::size_t n = sol.n_cells();
  const double dx = sol.dx();
  if (!(dt > 0.0)) throw CflError("step_relaxation: dt must be positive");
  const double dt_max = dx / std::max(1.0, max_lambda1(sol));
  if (dt > dt_max * (1.0 + kCflSlack)) {
    throw CflError("step_relaxation: dt = " + std::to_string(dt) +
                   " exceeds the CFL bound " + std::to_string(dt_max));
  }

  const GhostStates ghosts = apply_boundary(sol, bc, p);
  std::vector<InterfaceFlux> flux(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const MacroState a = k == 0 ? ghosts.left : sol.cell(k - 1);
    const MacroState b = k == n ? ghosts.right : sol.cell(k);
    flux[k] = godunov_flux_system(a, b, p);
  }

  GridSolution out = sol;
  const double nu = dt / dx;
  const double H = p.H;
  for (std::size_t i = 0; i < n; ++i) {
    const double rho = sol.rho[i] - nu * (flux[i + 1].rho - flux[i].rho);
    const double z_old = to_conservative(sol.cell(i), p).z;
    const double z_adv = z_old - nu * (flux[i + 1].z - flux[i].z);
    require_regular(rho, p, "step_relaxation");
    out.rho[i] = rho;
    if (p.epsilon == 0.0) {
      out.q[i] = sol.diagram(rho);
      continue;
    }
    double z = z_adv;
    if (std::isfinite(p.epsilon)) {
      const double r = dt / p.epsilon;
      z = (z_adv + r * equilibrium_z(sol.diagram, rho, p)) / (1.0 + r);
    }
    out.q[i] = z * std::pow(1.0 - rho, H) / H;
  }
  out.t = sol.t + dt;
  return out;
}

double relaxed_flux(const FundamentalDiagram& diagram, double a, double b) {
  const double fa = diagram(a);
  return fa * (1.0 - b + diagram(b)) / (1.0 - a + fa);
}

double lax_friedrichs_flux(const FundamentalDiagram& diagram, double a, double b,
                           double dt, double dx) {
  return 0.5 * (diagram(a) + diagram(b)) - 0.5 * dx / dt * (b - a);
}

double godunov_lwr_flux(const FundamentalDiagram& diagram, double a, double b) {
  const double rs = diagram.rho_star();
  const double demand = a < rs ? diagram(a) : diagram.max_flux();
  const double supply = b > rs ? diagram(b) : diagram.max_flux();
  return std::min(demand, supply);
}

std::vector<double> step_relaxed(std::span<const double> rho,
                                 const FundamentalDiagram& diagram, double dt,
                                 double dx, ScalarBoundary left,
                                 ScalarBoundary right) {
  for (double r : rho) {
    if (!(r >= 0.0 && r <= 1.0 - kDefaultDelta)) {
      throw DomainError("step_relaxed: density outside [0, 1 - delta]");
    }
  }
  return conservative_update(rho, dt, dx, left, right, [&](double a, double b) {
    return relaxed_flux(diagram, a, b);
  });
}

std::vector<double> step_lax_friedrichs(std::span<const double> rho,
                                        const FundamentalDiagram& diagram,
                                        double dt, double dx,
                                        ScalarBoundary left,
                                        ScalarBoundary right) {
  return conservative_update(rho, dt, dx, left, right, [&](double a, double b) {
    return lax_friedrichs_flux(diagram, a, b, dt, dx);
  });
}

std::vector<double> step_godunov_lwr(std::span<const double> rho,
                                     const FundamentalDiagram& diagram,
                                     double dt, double dx, ScalarBoundary left,
                                     ScalarBoundary right) {
  if (!diagram.is_concave(1000)) {
    throw DiagramError("step_godunov_lwr: diagram is not concave");
  }
  return conservative_update(rho, dt, dx, left, right, [&](double a, double b) {
    return godunov_lwr_flux(diagram, a, b);
  });
}

}  // namespace dvtraffic
