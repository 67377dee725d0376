#include "dvtraffic/riemann.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dvtraffic/errors.hpp"
#include "dvtraffic/root_finding.hpp"

namespace dvtraffic {

namespace {

constexpr double kTriangleTolerance = 1e-12;

void require_in_triangle(const MacroState& s, const ModelParams& params,
                         const char* where) {
  if (!s.in_triangle(kTriangleTolerance) || s.rho < -kTriangleTolerance) {
    throw DomainError(std::string(where) + ": state (" + std::to_string(s.rho) +
                      ", " + std::to_string(s.q) + ") outside the triangle");
  }
  require_regular(s.rho, params, where);
}

double z_of(const MacroState& s, const ModelParams& params) {
  return params.H * std::max(s.q, 0.0) / std::pow(1.0 - s.rho, params.H);
}

}  // namespace

const char* to_string(WaveKind kind) {
  switch (kind) {
    case WaveKind::none:
      return "none";
    case WaveKind::contact:
      return "contact";
    case WaveKind::shock:
      return "shock";
    case WaveKind::rarefaction:
      return "rarefaction";
  }
  return "unknown";
}

const char* to_string(ClusterRegime regime) {
  return regime == ClusterRegime::linear ? "linear" : "constrained";
}

MacroState state_from_invariants(double z, double f1, const ModelParams& params,
                                 RootMethod method) {
  if (!(z >= 0.0)) throw DomainError("state_from_invariants: negative z");
  f1 = std::min(f1, 1.0);
  if (z == 0.0) return {f1, 0.0};
  if (params.H == 1.0 && method == RootMethod::automatic) {
    const double rho = (f1 + z) / (1.0 + z);
    return {rho, rho - f1};
  }
  const double H = params.H;
  auto g = [&](double rho) { return H * (rho - f1) - z * std::pow(1.0 - rho, H); };
  const double rho = bisect(g, f1, 1.0, "intermediate state");
  return {rho, std::max(rho - f1, 0.0)};
}

MacroState intermediate_state(const MacroState& left, const MacroState& right,
                              const ModelParams& params, RootMethod method) {
  require_in_triangle(left, params, "intermediate_state");
  require_in_triangle(right, params, "intermediate_state");
  return interface_state(left, right, params, method);
}

MacroState interface_state(const MacroState& left, const MacroState& right,
                           const ModelParams& params, RootMethod method) {
  for (const MacroState* s : {&left, &right}) {
    if (!(s->q >= -kTriangleTolerance && s->rho >= -kTriangleTolerance)) {
      throw DomainError("interface_state: state (" + std::to_string(s->rho) +
                        ", " + std::to_string(s->q) + ") has negative rho or q");
    }
    require_regular(s->rho, params, "interface_state");
  }
  if (left == right) return left;
  const double f1 = right.rho - right.q;
  if (params.H == 1.0 && method == RootMethod::automatic) {
    // q_M = q_L (1 - rho_R + q_R) / (1 - rho_L + q_L); the relaxed scheme
    // evaluates the same expression, keep the operation order identical.
    const double q_left = std::max(left.q, 0.0);
    const double q = q_left * (1.0 - right.rho + right.q) / (1.0 - left.rho + q_left);
    return {q + f1, q};
  }
  return state_from_invariants(z_of(left, params), f1, params, method);
}

double shock_speed_1(const MacroState& left, const MacroState& middle,
                     const ModelParams& params) {
  require_regular(left.rho, params, "shock_speed_1");
  require_regular(middle.rho, params, "shock_speed_1");
  if (left.rho == middle.rho) {
    throw DegenerateWaveError("shock_speed_1: rho_L == rho_M, no 1-wave");
  }
  const double z_left = z_of(left, params);
  const double z_middle = z_of(middle, params);
  if (std::abs(z_left - z_middle) > 1e-10 * std::max(1.0, z_left)) {
    throw DomainError("shock_speed_1: states do not share the 2-invariant z");
  }
  const double H = params.H;
  return (z_left / H) *
         (std::pow(1.0 - left.rho, H) - std::pow(1.0 - middle.rho, H)) /
         (left.rho - middle.rho);
}

RiemannFan solve_riemann_system(const MacroState& left, const MacroState& right,
                                const ModelParams& params) {
  RiemannFan fan;
  fan.left = left;
  fan.right = right;
  fan.params = params;
  fan.middle = intermediate_state(left, right, params);
  const MacroState& mid = fan.middle;

  if (mid.rho != left.rho) {
    const double H = params.H;
    const double z_left = z_of(left, params);
    if (z_left == 0.0) {
      fan.wave1 = {WaveKind::contact, 0.0, 0.0};
    } else if (H == 1.0) {
      fan.wave1 = {WaveKind::contact, -z_left, -z_left};
    } else {
      const double lam_left = -z_left * std::pow(1.0 - left.rho, H - 1.0);
      const double lam_mid = -z_left * std::pow(1.0 - mid.rho, H - 1.0);
      if (lam_left <= lam_mid) {
        fan.wave1 = {WaveKind::rarefaction, lam_left, lam_mid};
      } else {
        const double s = shock_speed_1(left, mid, params);
        fan.wave1 = {WaveKind::shock, s, s};
      }
    }
  }
  if (mid != right) fan.wave2 = {WaveKind::contact, 1.0, 1.0};
  return fan;
}

MacroState RiemannFan::sample(double xi) const {
  if (wave1.kind != WaveKind::none && xi < wave1.speed_lo) return left;
  if (wave1.kind == WaveKind::rarefaction && xi < wave1.speed_hi) {
    const double H = params.H;
    const double z_left = z_of(left, params);
    const double rho = 1.0 - std::pow(-xi / z_left, 1.0 / (H - 1.0));
    return {rho, z_left * std::pow(1.0 - rho, H) / H};
  }
  if (wave2.kind == WaveKind::none || xi < wave2.speed_lo) return middle;
  return right;
}

LwrFan solve_riemann_lwr(const FundamentalDiagram& diagram, double rho_left,
                         double rho_right) {
  if (rho_left < 0.0 || rho_left > 1.0 || rho_right < 0.0 || rho_right > 1.0) {
    throw DomainError("solve_riemann_lwr: densities must lie in [0, 1]");
  }
  if (!diagram.is_concave()) {
    throw DiagramError(
        "solve_riemann_lwr: diagram is not concave; only concave fluxes are "
        "supported");
  }
  LwrFan fan{diagram, rho_left, rho_right, {}};
  if (rho_left < rho_right) {
    const double s = (diagram(rho_right) - diagram(rho_left)) / (rho_right - rho_left);
    fan.wave = {WaveKind::shock, s, s};
  } else if (rho_left > rho_right) {
    fan.wave = {WaveKind::rarefaction, diagram.deriv(rho_left),
                diagram.deriv(rho_right)};
  }
  return fan;
}

double LwrFan::sample(double xi) const {
  switch (wave.kind) {
    case WaveKind::none:
      return rho_left;
    case WaveKind::shock:
    case WaveKind::contact:
      return xi < wave.speed_lo ? rho_left : rho_right;
    case WaveKind::rarefaction:
      if (xi <= wave.speed_lo) return rho_left;
      if (xi >= wave.speed_hi) return rho_right;
      if (diagram.kind() == DiagramKind::lighthill_whitham) return 0.5 * (1.0 - xi);
      return bisect([&](double r) { return diagram.deriv(r) - xi; }, rho_right,
                    rho_left, "inverse characteristic speed");
  }
  return rho_left;
}

ClusterFan solve_riemann_cluster(const MacroState& left,
                                 const MacroState& right) {
  for (const MacroState* s : {&left, &right}) {
    if (!s->in_triangle(kTriangleTolerance) || s->rho < -kTriangleTolerance) {
      throw DomainError("solve_riemann_cluster: state outside the triangle");
    }
  }
  ClusterFan fan;
  fan.left = left;
  fan.right = right;
  if (right.rho - right.q <= 1.0 - left.q) {
    fan.regime = ClusterRegime::linear;
    fan.middle = {right.rho + left.q - right.q, left.q};
    fan.shock_speed = 0.0;
    return fan;
  }
  if (left.rho >= 1.0) {
    throw DomainError(
        "solve_riemann_cluster: rho_L = 1 with constrained data has no "
        "defined shock speed");
  }
  fan.regime = ClusterRegime::constrained;
  // rho_R = 1 reduces to middle (1, q_R) and s = (q_R - q_L) / (1 - rho_L).
  fan.middle = {1.0, 1.0 + right.q - right.rho};
  fan.shock_speed = (1.0 - left.q + right.q - right.rho) / (1.0 - left.rho);
  return fan;
}

MacroState ClusterFan::sample(double xi) const {
  if (left == right) return left;
  if (xi < shock_speed) return left;
  if (xi < 1.0) return middle;
  return right;
}

}  // namespace dvtraffic
