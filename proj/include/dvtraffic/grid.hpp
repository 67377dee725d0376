#ifndef DVTRAFFIC_GRID_HPP
#define DVTRAFFIC_GRID_HPP

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "dvtraffic/diagram.hpp"
#include "dvtraffic/state.hpp"

namespace dvtraffic {

/// Cell averages on a uniform 1-D grid.
class GridSolution {
 public:
  GridSolution(FundamentalDiagram diagram, ModelParams params, double x_lo,
               double x_hi, std::size_t n_cells);

  std::size_t n_cells() const { return rho.size(); }
  double dx() const { return (x_hi - x_lo) / static_cast<double>(rho.size()); }
  double x_center(std::size_t i) const {
    return x_lo + (static_cast<double>(i) + 0.5) * dx();
  }
  MacroState cell(std::size_t i) const { return {rho[i], q[i]}; }
  void set_cell(std::size_t i, const MacroState& s) {
    rho[i] = s.rho;
    q[i] = s.q;
  }

  /// Fills every cell with init(x_center).
  void fill(const std::function<MacroState(double)>& init);

  double x_lo;
  double x_hi;
  std::vector<double> rho;
  std::vector<double> q;
  double t = 0.0;
  ModelParams params;
  FundamentalDiagram diagram;
};

/// Boundary condition on one side of the domain. `prescribed` carries the
/// incoming Riemann invariant: g2 = H q / (1 - rho)^H on the left,
/// g1 = rho - q on the right.
struct BoundaryCondition {
  enum class Kind { prescribed, outflow, periodic };
  Kind kind = Kind::outflow;
  double value = 0.0;

  static BoundaryCondition outflow() { return {Kind::outflow, 0.0}; }
  static BoundaryCondition periodic() { return {Kind::periodic, 0.0}; }
  static BoundaryCondition prescribed(double v) { return {Kind::prescribed, v}; }

  friend bool operator==(const BoundaryCondition&,
                         const BoundaryCondition&) = default;
};

struct BoundarySpec {
  BoundaryCondition left = BoundaryCondition::outflow();
  BoundaryCondition right = BoundaryCondition::outflow();

  /// Periodic must be set on both sides or neither; g1 must lie in [0, 1]
  /// and g2 must be nonnegative.
  void validate() const;

  static BoundarySpec outflow() { return {}; }
  static BoundarySpec periodic() {
    return {BoundaryCondition::periodic(), BoundaryCondition::periodic()};
  }

  friend bool operator==(const BoundarySpec&, const BoundarySpec&) = default;
};

/// "outflow", "periodic" or "g2=<v>" / "g1=<v>".
std::string describe(const BoundaryCondition& bc, const char* invariant);
std::string describe(const BoundarySpec& bc);

}  // namespace dvtraffic

#endif  // DVTRAFFIC_GRID_HPP
