#ifndef DVTRAFFIC_SIMULATION_HPP
#define DVTRAFFIC_SIMULATION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "dvtraffic/grid.hpp"

namespace dvtraffic {

enum class Scheme { relaxation, relaxed, lxf, godunov };

const char* to_string(Scheme scheme);
/// Throws DomainError for unknown names.
Scheme parse_scheme(const std::string& name);
/// True for the schemes that evolve q as an independent unknown.
inline bool is_kinetic(Scheme s) { return s == Scheme::relaxation; }

struct StepLog {
  std::vector<double> dt;
  double rho_min = 0.0;
  double rho_max = 0.0;
  double q_min = 0.0;
  double q_max = 0.0;

  std::size_t steps() const { return dt.size(); }
};

struct SimulationResult {
  GridSolution solution;
  StepLog log;
};

/// Time step bound for the next step: cfl dx / max(1, max |lambda1|) for the
/// relaxation and relaxed schemes, cfl dx / max |F'| for the scalar ones.
double stable_dt(const GridSolution& sol, const BoundarySpec& bc, Scheme scheme,
                 double cfl);

/// Steps `initial` to t_end, truncating the final step to land on it.
///
/// Scalar schemes turn a prescribed kinetic boundary datum into a Dirichlet
/// value through the boundary-layer resolvers, using the adjacent cell as
/// rho_B. On return, q holds F(rho) for the scalar schemes.
SimulationResult run_simulation(const GridSolution& initial,
                                const BoundarySpec& bc, Scheme scheme,
                                double t_end, double cfl);

}  // namespace dvtraffic

#endif  // DVTRAFFIC_SIMULATION_HPP
