#ifndef DVTRAFFIC_SCHEMES_HPP
#define DVTRAFFIC_SCHEMES_HPP

#include <span>
#include <vector>

#include "dvtraffic/diagram.hpp"
#include "dvtraffic/grid.hpp"
#include "dvtraffic/state.hpp"

namespace dvtraffic {

struct InterfaceFlux {
  double rho = 0.0;  ///< flux of rho, q at the interface state
  double z = 0.0;    ///< flux of z, upwinded at speed 1
};

/// Godunov flux of the conservative (rho, z) system. Every 1-wave moves
/// with speed <= 0 and the 2-wave with speed 1, so the interface state is
/// the intermediate state of the local Riemann problem.
InterfaceFlux godunov_flux_system(const MacroState& left, const MacroState& right,
                                  const ModelParams& params);

struct GhostStates {
  MacroState left;
  MacroState right;
};

/// Ghost cells for the kinetic schemes. A prescribed left boundary fixes z
/// and carries rho - q from the first cell; a prescribed right boundary
/// fixes rho - q and carries z from the last cell.
GhostStates apply_boundary(const GridSolution& sol, const BoundarySpec& bc,
                           const ModelParams& params);
inline GhostStates apply_boundary(const GridSolution& sol,
                                  const BoundarySpec& bc) {
  return apply_boundary(sol, bc, sol.params);
}

/// Largest |lambda1| over the cells.
double max_lambda1(const GridSolution& sol);

/// One step of the splitting scheme: Godunov advection of (rho, z), then
/// implicit Euler relaxation of z towards H F(rho) / (1 - rho)^H.
/// Throws CflError when dt > dx / max(1, max |lambda1|).
GridSolution step_relaxation(const GridSolution& sol, const BoundarySpec& bc,
                             double dt);

/// Boundary treatment for the scalar schemes.
struct ScalarBoundary {
  enum class Kind { outflow, periodic, dirichlet };
  Kind kind = Kind::outflow;
  double value = 0.0;

  static ScalarBoundary outflow() { return {Kind::outflow, 0.0}; }
  static ScalarBoundary periodic() { return {Kind::periodic, 0.0}; }
  static ScalarBoundary dirichlet(double v) { return {Kind::dirichlet, v}; }
};

/// Numerical flux of the relaxed scheme,
/// F(a) (1 - b + F(b)) / (1 - a + F(a)).
double relaxed_flux(const FundamentalDiagram& diagram, double a, double b);
double lax_friedrichs_flux(const FundamentalDiagram& diagram, double a, double b,
                           double dt, double dx);
/// Exact Riemann flux for concave F: min(demand(a), supply(b)).
double godunov_lwr_flux(const FundamentalDiagram& diagram, double a, double b);

/// The kinetic scheme with H = 1 and epsilon = 0 written in rho only.
std::vector<double> step_relaxed(std::span<const double> rho,
                                 const FundamentalDiagram& diagram, double dt,
                                 double dx,
                                 ScalarBoundary left = ScalarBoundary::outflow(),
                                 ScalarBoundary right = ScalarBoundary::outflow());

std::vector<double> step_lax_friedrichs(
    std::span<const double> rho, const FundamentalDiagram& diagram, double dt,
    double dx, ScalarBoundary left = ScalarBoundary::outflow(),
    ScalarBoundary right = ScalarBoundary::outflow());

std::vector<double> step_godunov_lwr(
    std::span<const double> rho, const FundamentalDiagram& diagram, double dt,
    double dx, ScalarBoundary left = ScalarBoundary::outflow(),
    ScalarBoundary right = ScalarBoundary::outflow());

}  // namespace dvtraffic

#endif  // DVTRAFFIC_SCHEMES_HPP
