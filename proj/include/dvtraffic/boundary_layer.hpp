#ifndef DVTRAFFIC_BOUNDARY_LAYER_HPP
#define DVTRAFFIC_BOUNDARY_LAYER_HPP

#include <optional>
#include <vector>

#include "dvtraffic/diagram.hpp"
#include "dvtraffic/errors.hpp"
#include "dvtraffic/state.hpp"

namespace dvtraffic {

enum class Side { left, right };
enum class BoundaryCase { ingoing, transonic, outgoing };

const char* to_string(Side side);
const char* to_string(BoundaryCase c);

/// Fixed points of the stationary layer equation for flux constant C.
struct LayerFixedPoints {
  double rho1 = 0.0;  ///< F(rho1) = C, rho1 <= rho_star
  double rho2 = 0.0;  ///< tau(rho1) >= rho_star
  double rho3 = 1.0;
  double C = 0.0;
  bool merged = false;  ///< C = F(rho_star): rho1 = rho2 = rho_star
};

/// Macroscopic boundary datum derived from kinetic boundary data.
struct BoundaryResolution {
  Side side = Side::left;
  BoundaryCase boundary_case = BoundaryCase::ingoing;
  double rho_wall = 0.0;  ///< layer value at the wall
  double rho_K = 0.0;     ///< far-field layer value seen by the scalar law
  double C = 0.0;         ///< flux carried through the layer
};

struct LayerProfile {
  std::vector<double> x;
  std::vector<double> rho;
  double C = 0.0;
  /// Stable fixed point reached, if the integration terminated on one.
  std::optional<double> converged_to;
};

/// Integration left [0, 1 - delta]; carries the partial profile.
class LayerBlowUpError : public SolverError {
 public:
  LayerBlowUpError(const std::string& what, LayerProfile partial)
      : SolverError(what), partial_(std::move(partial)) {}
  const LayerProfile& partial() const { return partial_; }

 private:
  LayerProfile partial_;
};

LayerFixedPoints layer_fixed_points(const FundamentalDiagram& diagram, double C);

/// RK4 integration of d(rho)/dx = +-(1 - rho)(F(rho) - C)/(H C), '+' on the
/// left side. Stops early within 1e-10 of a stable fixed point. Defaults:
/// x_max = 20 H max(C, 0.01), n_steps = 2000.
LayerProfile integrate_layer(const FundamentalDiagram& diagram,
                             const ModelParams& params, double C, double rho0,
                             Side side, std::optional<double> x_max = {},
                             int n_steps = 2000);

/// Left boundary with prescribed g2 = H q / (1 - rho)^H and interior
/// density rho_B.
BoundaryResolution resolve_left_boundary(const FundamentalDiagram& diagram,
                                         const ModelParams& params, double g2,
                                         double rho_B);

/// Right boundary with prescribed g1 = rho - q and interior density rho_B.
BoundaryResolution resolve_right_boundary(const FundamentalDiagram& diagram,
                                          const ModelParams& params, double g1,
                                          double rho_B);

/// Explicit formulas for F(rho) = rho (1 - rho). The ingoing left branch is
/// only available for H in {1, 2, 3}.
BoundaryResolution lw_closed_forms(double H, Side side, BoundaryCase c,
                                   double g, double rho_B);

}  // namespace dvtraffic

#endif  // DVTRAFFIC_BOUNDARY_LAYER_HPP
