#include "dvtraffic/state.hpp"

#include <cmath>
#include <string>

#include "dvtraffic/errors.hpp"

namespace dvtraffic {

void ModelParams::validate() const {
  if (!(H > 0.0) || !std::isfinite(H)) {
    throw DomainError("H must be positive and finite, got " +
                      std::to_string(H));
  }
  if (!(epsilon >= 0.0)) {
    throw DomainError("epsilon must be nonnegative, got " +
                      std::to_string(epsilon));
  }
  if (!(delta > 0.0 && delta <= 1e-6)) {
    throw DomainError("delta must lie in (0, 1e-6], got " +
                      std::to_string(delta));
  }
}

void require_regular(double rho, const ModelParams& params, const char* where) {
  if (rho > 1.0 - params.delta) {
    throw SingularityError(std::string(where) + ": density " +
                           std::to_string(rho) + " exceeds 1 - delta");
  }
}

double equilibrium_z(const FundamentalDiagram& diagram, double rho,
                     const ModelParams& params) {
  require_regular(rho, params, "equilibrium_z");
  return params.H * diagram(rho) / std::pow(1.0 - rho, params.H);
}

ConservativeState to_conservative(const MacroState& state,
                                  const ModelParams& params) {
  require_regular(state.rho, params, "to_conservative");
  return {state.rho, params.H * state.q / std::pow(1.0 - state.rho, params.H)};
}

MacroState from_conservative(const ConservativeState& cstate,
                             const ModelParams& params) {
  require_regular(cstate.rho, params, "from_conservative");
  if (cstate.z < 0.0) {
    throw DomainError("from_conservative: negative z " +
                      std::to_string(cstate.z));
  }
  const double q = cstate.z * std::pow(1.0 - cstate.rho, params.H) / params.H;
  if (q > cstate.rho + 1e-9) {
    throw DomainError("from_conservative: q = " + std::to_string(q) +
                      " exceeds rho = " + std::to_string(cstate.rho));
  }
  return {cstate.rho, q};
}

EigenStructure eigenstructure(const MacroState& state,
                              const ModelParams& params) {
  require_regular(state.rho, params, "eigenstructure");
  const double alpha = params.H * state.q / (1.0 - state.rho);
  EigenStructure e;
  e.lambda1 = -alpha;
  e.lambda2 = 1.0;
  e.r1 = {1.0, -alpha};
  e.r2 = {1.0, 1.0};
  return e;
}

double genuine_nonlinearity_indicator(const MacroState& state,
                                      const ModelParams& params) {
  require_regular(state.rho, params, "genuine_nonlinearity_indicator");
  const double one_minus = 1.0 - state.rho;
  return params.H * state.q * (params.H - 1.0) / (one_minus * one_minus);
}

SubcharacteristicReport check_subcharacteristic(
    const FundamentalDiagram& diagram, const ModelParams& params,
    int n_samples) {
  if (n_samples < 10) {
    throw DomainError("check_subcharacteristic needs at least 10 samples");
  }
  SubcharacteristicReport report;
  report.n_samples = n_samples;
  report.margin = std::numeric_limits<double>::infinity();
  const double rho_max = 1.0 - params.delta;
  for (int k = 0; k < n_samples; ++k) {
    const double rho = rho_max * k / (n_samples - 1);
    const double fp = diagram.deriv(rho);
    const double lower = fp + params.H * diagram(rho) / (1.0 - rho);
    const double upper = 1.0 - fp;
    const double slack = std::min(lower, upper);
    if (slack < report.margin) {
      report.margin = slack;
      report.worst_rho = rho;
    }
    if (slack < kSubcharacteristicSlack && !report.first_violation) {
      report.first_violation = rho;
    }
  }
  report.pass = !report.first_violation.has_value();
  return report;
}

MacroState equilibrium(const FundamentalDiagram& diagram, double rho) {
  if (rho < 0.0 || rho > 1.0) {
    throw DomainError("equilibrium: density outside [0, 1]");
  }
  return {rho, diagram(rho)};
}

}  // namespace dvtraffic
