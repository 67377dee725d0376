#ifndef DVTRAFFIC_RIEMANN_HPP
#define DVTRAFFIC_RIEMANN_HPP

#include "dvtraffic/diagram.hpp"
#include "dvtraffic/state.hpp"

namespace dvtraffic {

enum class WaveKind { none, contact, shock, rarefaction };

const char* to_string(WaveKind kind);

/// A wave of the self-similar solution. Discontinuities have
/// speed_lo == speed_hi; a rarefaction spans [speed_lo, speed_hi].
struct Wave {
  WaveKind kind = WaveKind::none;
  double speed_lo = 0.0;
  double speed_hi = 0.0;
};

/// Exact solution of the homogeneous two-velocity system.
///
/// The 1-wave keeps z = H q / (1-rho)^H constant and moves with speed <= 0;
/// the 2-wave is a contact at speed exactly 1 that keeps rho - q constant.
struct RiemannFan {
  MacroState left;
  MacroState right;
  MacroState middle;
  Wave wave1;
  Wave wave2;
  ModelParams params;

  /// State at xi = x / t.
  MacroState sample(double xi) const;
  MacroState operator()(double xi) const { return sample(xi); }
};

/// Exact solution of the scalar limit rho_t + F(rho)_x = 0 (concave F).
struct LwrFan {
  FundamentalDiagram diagram;
  double rho_left = 0.0;
  double rho_right = 0.0;
  Wave wave;

  double sample(double xi) const;
  double operator()(double xi) const { return sample(xi); }
};

enum class ClusterRegime { linear, constrained };

const char* to_string(ClusterRegime regime);

/// Riemann solution of the H = 0 constrained model.
struct ClusterFan {
  ClusterRegime regime = ClusterRegime::linear;
  MacroState left;
  MacroState right;
  MacroState middle;
  /// Backward shock speed (constrained regime); 0 in the linear regime,
  /// where the first wave is stationary.
  double shock_speed = 0.0;

  MacroState sample(double xi) const;
  MacroState operator()(double xi) const { return sample(xi); }
};

enum class RootMethod { automatic, bisection };

/// The state with 2-invariant z and 1-invariant rho - q = f1.
///
/// Solves H (rho - f1) = z (1 - rho)^H; closed form for H = 1 unless
/// `method` forces bisection. The result lies in the triangle whenever
/// z >= 0 and 0 <= f1 <= 1; f1 < 0 is accepted and gives q > rho.
MacroState state_from_invariants(double z, double f1, const ModelParams& params,
                                 RootMethod method = RootMethod::automatic);

/// Intersection of the 1-curve through `left` with the 2-curve through
/// `right`.
MacroState intermediate_state(const MacroState& left, const MacroState& right,
                              const ModelParams& params,
                              RootMethod method = RootMethod::automatic);

/// intermediate_state without the triangle check: only rho, q >= 0 and
/// rho <= 1 - delta are required. Cell averages of the relaxation scheme
/// can satisfy q > rho, since the triangle is not convex in (rho, z).
MacroState interface_state(const MacroState& left, const MacroState& right,
                           const ModelParams& params,
                           RootMethod method = RootMethod::automatic);

/// Rankine-Hugoniot speed of a 1-wave from `left` to `middle`.
double shock_speed_1(const MacroState& left, const MacroState& middle,
                     const ModelParams& params);

RiemannFan solve_riemann_system(const MacroState& left, const MacroState& right,
                                const ModelParams& params);

LwrFan solve_riemann_lwr(const FundamentalDiagram& diagram, double rho_left,
                         double rho_right);

ClusterFan solve_riemann_cluster(const MacroState& left,
                                 const MacroState& right);

}  // namespace dvtraffic

#endif  // DVTRAFFIC_RIEMANN_HPP
