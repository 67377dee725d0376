#include "dvtraffic/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "dvtraffic/boundary_layer.hpp"
#include "dvtraffic/errors.hpp"
#include "dvtraffic/riemann.hpp"
#include "dvtraffic/schemes.hpp"

namespace dvtraffic {

namespace {

constexpr std::size_t kMaxSteps = 50'000'000;

ScalarBoundary scalar_side(const GridSolution& sol, const BoundaryCondition& bc,
                           Side side) {
  switch (bc.kind) {
    case BoundaryCondition::Kind::outflow:
      return ScalarBoundary::outflow();
    case BoundaryCondition::Kind::periodic:
      return ScalarBoundary::periodic();
    case BoundaryCondition::Kind::prescribed: {
      if (side == Side::left) {
        return ScalarBoundary::dirichlet(
            resolve_left_boundary(sol.diagram, sol.params, bc.value, sol.rho.front())
                .rho_K);
      }
      return ScalarBoundary::dirichlet(
          resolve_right_boundary(sol.diagram, sol.params, bc.value, sol.rho.back())
              .rho_K);
    }
  }
  return ScalarBoundary::outflow();
}

void record_bounds(StepLog& log, const GridSolution& sol) {
  const auto [rmin, rmax] = std::minmax_element(sol.rho.begin(), sol.rho.end());
  const auto [qmin, qmax] = std::minmax_element(sol.q.begin(), sol.q.end());
  log.rho_min = std::min(log.rho_min, *rmin);
  log.rho_max = std::max(log.rho_max, *rmax);
  log.q_min = std::min(log.q_min, *qmin);
  log.q_max = std::max(log.q_max, *qmax);
}

}  // namespace

const char* to_string(Scheme scheme) {
  switch (scheme) {
    case Scheme::relaxation:
      return "relaxation";
    case Scheme::relaxed:
      return "relaxed";
    case Scheme::lxf:
      return "lxf";
    case Scheme::godunov:
      return "godunov";
  }
  return "unknown";
}

Scheme parse_scheme(const std::string& name) {
  for (Scheme s : {Scheme::relaxation, Scheme::relaxed, Scheme::lxf, Scheme::godunov}) {
    if (name == to_string(s)) return s;
  }
  throw DomainError("unknown scheme '" + name + "'");
}

double stable_dt(const GridSolution& sol, const BoundarySpec& bc, Scheme scheme,
                 double cfl) {
  const double dx = sol.dx();
  switch (scheme) {
    case Scheme::relaxation: {
      // Wave speeds of the interface problems can exceed the cell values of
      // |lambda1| when H != 1, so the intermediate states are included.
      double speed = max_lambda1(sol);
      if (sol.params.H != 1.0) {
        const GhostStates g = apply_boundary(sol, bc);
        const std::size_t n = sol.n_cells();
        for (std::size_t k = 0; k <= n; ++k) {
          const MacroState a = k == 0 ? g.left : sol.cell(k - 1);
          const MacroState b = k == n ? g.right : sol.cell(k);
          const MacroState m = interface_state(a, b, sol.params);
          speed = std::max(speed, std::abs(eigenstructure(m, sol.params).lambda1));
        }
      }
      return cfl * dx / std::max(1.0, speed);
    }
    case Scheme::relaxed: {
      double speed = 0.0;
      for (double r : sol.rho) {
        require_regular(r, sol.params, "stable_dt");
        speed = std::max(speed, sol.diagram(r) / (1.0 - r));
      }
      return cfl * dx / std::max(1.0, speed);
    }
    case Scheme::lxf:
    case Scheme::godunov: {
      double speed = 0.0;
      for (double r : sol.rho) speed = std::max(speed, std::abs(sol.diagram.deriv(r)));
      if (speed == 0.0) return std::numeric_limits<double>::infinity();
      return cfl * dx / speed;
    }
  }
  return 0.0;
}

SimulationResult run_simulation(const GridSolution& initial,
                                const BoundarySpec& bc, Scheme scheme,
                                double t_end, double cfl) {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw DomainError("cfl must lie in (0, 1]");
  if (!(t_end >= initial.t)) throw DomainError("t_end must not precede initial.t");
  bc.validate();

  SimulationResult result{initial, {}};
  GridSolution& sol = result.solution;
  StepLog& log = result.log;
  if (!is_kinetic(scheme)) {
    for (std::size_t i = 0; i < sol.n_cells(); ++i) sol.q[i] = sol.diagram(sol.rho[i]);
  }
  log.rho_min = log.rho_max = sol.rho.front();
  log.q_min = log.q_max = sol.q.front();
  record_bounds(log, sol);

  while (sol.t < t_end) {
    if (log.steps() >= kMaxSteps) throw SolverError("run_simulation: step limit reached");
    double dt = stable_dt(sol, bc, scheme, cfl);
    if ((t_end - sol.t) / dt > static_cast<double>(kMaxSteps - log.steps())) {
      char msg[160];
      std::snprintf(msg, sizeof msg,
                    "run_simulation: time step collapsed to %.3g at t = %.6g after %zu steps",
                    dt, sol.t, log.steps());
      throw CflError(msg);
    }
    const bool last = sol.t + dt >= t_end;
    if (last) dt = t_end - sol.t;

    if (scheme == Scheme::relaxation) {
      sol = step_relaxation(sol, bc, dt);
    } else {
      const ScalarBoundary left = scalar_side(sol, bc.left, Side::left);
      const ScalarBoundary right = scalar_side(sol, bc.right, Side::right);
      const double dx = sol.dx();
      switch (scheme) {
        case Scheme::relaxed:
          sol.rho = step_relaxed(sol.rho, sol.diagram, dt, dx, left, right);
          break;
        case Scheme::lxf:
          sol.rho = step_lax_friedrichs(sol.rho, sol.diagram, dt, dx, left, right);
          break;
        case Scheme::godunov:
          sol.rho = step_godunov_lwr(sol.rho, sol.diagram, dt, dx, left, right);
          break;
        case Scheme::relaxation:
          break;
      }
      for (std::size_t i = 0; i < sol.n_cells(); ++i) sol.q[i] = sol.diagram(sol.rho[i]);
      sol.t += dt;
    }
    if (last) sol.t = t_end;
    log.dt.push_back(dt);
    record_bounds(log, sol);
  }
  return result;
}

}  // namespace dvtraffic
