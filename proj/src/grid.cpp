#include "dvtraffic/grid.hpp"

#include <sstream>

#include "dvtraffic/errors.hpp"

namespace dvtraffic {

GridSolution::GridSolution(FundamentalDiagram diagram_, ModelParams params_,
                           double x_lo_, double x_hi_, std::size_t n_cells)
    : x_lo(x_lo_),
      x_hi(x_hi_),
      rho(n_cells, 0.0),
      q(n_cells, 0.0),
      params(params_),
      diagram(std::move(diagram_)) {
  if (n_cells == 0) throw DomainError("grid needs at least one cell");
  if (!(x_hi > x_lo)) throw DomainError("grid needs x_hi > x_lo");
  params.validate();
}

void GridSolution::fill(const std::function<MacroState(double)>& init) {
  for (std::size_t i = 0; i < n_cells(); ++i) set_cell(i, init(x_center(i)));
}

void BoundarySpec::validate() const {
  const bool lp = left.kind == BoundaryCondition::Kind::periodic;
  const bool rp = right.kind == BoundaryCondition::Kind::periodic;
  if (lp != rp) {
    throw DomainError("periodic boundaries must be set on both sides");
  }
  if (left.kind == BoundaryCondition::Kind::prescribed && !(left.value >= 0.0)) {
    throw DomainError("prescribed g2 must be nonnegative");
  }
  if (right.kind == BoundaryCondition::Kind::prescribed &&
      !(right.value >= 0.0 && right.value <= 1.0)) {
    throw DomainError("prescribed g1 must lie in [0, 1]");
  }
}

std::string describe(const BoundaryCondition& bc, const char* invariant) {
  switch (bc.kind) {
    case BoundaryCondition::Kind::outflow:
      return "outflow";
    case BoundaryCondition::Kind::periodic:
      return "periodic";
    case BoundaryCondition::Kind::prescribed: {
      std::ostringstream os;
      os.precision(17);
      os << invariant << '=' << bc.value;
      return os.str();
    }
  }
  return "unknown";
}

std::string describe(const BoundarySpec& bc) {
  return "left:" + describe(bc.left, "g2") + ",right:" + describe(bc.right, "g1");
}

}  // namespace dvtraffic
