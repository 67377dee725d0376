#ifndef DVTRAFFIC_STATE_HPP
#define DVTRAFFIC_STATE_HPP

#include <array>
#include <limits>
#include <optional>

#include "dvtraffic/diagram.hpp"

namespace dvtraffic {

/// Primitive state: density and flux. The two discrete velocities are fixed
/// at 0 and 1, so f1 = rho - q counts stopped and f2 = q moving vehicles.
struct MacroState {
  double rho = 0.0;
  double q = 0.0;

  double f1() const { return rho - q; }
  double f2() const { return q; }

  /// 0 <= q <= rho <= 1, each bound relaxed by `tol`.
  bool in_triangle(double tol = 0.0) const {
    return q >= -tol && q <= rho + tol && rho <= 1.0 + tol;
  }

  friend bool operator==(const MacroState&, const MacroState&) = default;
};

/// Conservative state (rho, z) with z = H q / (1 - rho)^H.
struct ConservativeState {
  double rho = 0.0;
  double z = 0.0;

  friend bool operator==(const ConservativeState&,
                         const ConservativeState&) = default;
};

inline constexpr double kDefaultDelta = 1e-10;

struct ModelParams {
  /// Look-ahead exponent of the braking term.
  double H = 1.0;
  /// Relaxation time. 0 selects the equilibrium projection, +inf switches
  /// the source term off.
  double epsilon = 0.1;
  /// Densities above 1 - delta are rejected as singular.
  double delta = kDefaultDelta;

  /// Throws DomainError unless H > 0, epsilon >= 0, delta in (0, 1e-6].
  void validate() const;

  static double no_relaxation() {
    return std::numeric_limits<double>::infinity();
  }
};

struct EigenStructure {
  double lambda1 = 0.0;
  double lambda2 = 1.0;
  std::array<double, 2> r1{1.0, 0.0};
  std::array<double, 2> r2{1.0, 1.0};
};

struct SubcharacteristicReport {
  bool pass = false;
  /// Minimum slack of -HF/(1-rho) <= F' <= 1 over the grid.
  double margin = 0.0;
  /// Density where the minimum slack occurs.
  double worst_rho = 0.0;
  /// First grid density with slack below the pass threshold.
  std::optional<double> first_violation;
  int n_samples = 0;
};

inline constexpr double kSubcharacteristicSlack = -1e-12;

/// Throws SingularityError when rho > 1 - delta.
void require_regular(double rho, const ModelParams& params, const char* where);

/// H F(rho) / (1 - rho)^H, the equilibrium value of z.
double equilibrium_z(const FundamentalDiagram& diagram, double rho,
                     const ModelParams& params);

ConservativeState to_conservative(const MacroState& state,
                                  const ModelParams& params);
MacroState from_conservative(const ConservativeState& cstate,
                             const ModelParams& params);

EigenStructure eigenstructure(const MacroState& state,
                              const ModelParams& params);

/// grad(lambda1) . r1 = H q (H - 1) / (1 - rho)^2.
double genuine_nonlinearity_indicator(const MacroState& state,
                                      const ModelParams& params);

SubcharacteristicReport check_subcharacteristic(
    const FundamentalDiagram& diagram, const ModelParams& params,
    int n_samples = 10000);

MacroState equilibrium(const FundamentalDiagram& diagram, double rho);

}  // namespace dvtraffic

#endif  // DVTRAFFIC_STATE_HPP
