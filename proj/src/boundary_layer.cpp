#include "dvtraffic/boundary_layer.hpp"

#include <cmath>
#include <string>

#include "dvtraffic/root_finding.hpp"

namespace dvtraffic {

namespace {

constexpr double kMergeTolerance = 1e-12;
constexpr double kConvergenceTolerance = 1e-10;

void require_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw DomainError(std::string(name) + " = " + std::to_string(v) +
                      " outside [0, 1]");
  }
}

// H F(rho) / (1 - rho)^H, monotone increasing on [0, rho_star].
double left_invariant(const FundamentalDiagram& d, double H, double rho) {
  return H * d(rho) / std::pow(1.0 - rho, H);
}

// 1 - (H F / g2)^(1/H); a wall carrying no flux sits at rho = 1.
double left_wall_density(double H, double flux, double g2) {
  if (flux == 0.0) return 1.0;
  return 1.0 - std::pow(H * flux / g2, 1.0 / H);
}

}  // namespace

const char* to_string(Side side) {
  return side == Side::left ? "left" : "right";
}

const char* to_string(BoundaryCase c) {
  switch (c) {
    case BoundaryCase::ingoing:
      return "ingoing";
    case BoundaryCase::transonic:
      return "transonic";
    case BoundaryCase::outgoing:
      return "outgoing";
  }
  return "unknown";
}

LayerFixedPoints layer_fixed_points(const FundamentalDiagram& diagram, double C) {
  const double c_max = diagram.max_flux();
  if (C < 0.0 || C > c_max + kMergeTolerance) {
    throw DomainError("layer_fixed_points: C = " + std::to_string(C) +
                      " outside [0, F(rho_star)]");
  }
  LayerFixedPoints fp;
  fp.C = C;
  if (std::abs(C - c_max) <= kMergeTolerance) {
    fp.merged = true;
    fp.rho1 = fp.rho2 = diagram.rho_star();
    return fp;
  }
  fp.rho1 = C == 0.0 ? 0.0
                     : bisect([&](double r) { return diagram(r) - C; }, 0.0,
                              diagram.rho_star(), "layer fixed point");
  fp.rho2 = diagram.tau(fp.rho1);
  return fp;
}

LayerProfile integrate_layer(const FundamentalDiagram& diagram,
                             const ModelParams& params, double C, double rho0,
                             Side side, std::optional<double> x_max,
                             int n_steps) {
  if (!(C > 0.0)) throw DomainError("integrate_layer: C must be positive");
  if (!(rho0 >= 0.0 && rho0 <= 1.0 - params.delta)) {
    throw DomainError("integrate_layer: rho0 outside [0, 1 - delta]");
  }
  if (n_steps < 1) throw DomainError("integrate_layer: n_steps must be >= 1");
  const LayerFixedPoints fp = layer_fixed_points(diagram, C);

  std::vector<double> stable;
  if (side == Side::left) {
    stable = {fp.rho2};
  } else {
    stable = {fp.rho1, fp.rho3};
  }
  const double H = params.H;
  const double sign = side == Side::left ? 1.0 : -1.0;
  auto rhs = [&](double r) { return sign * (1.0 - r) * (diagram(r) - C) / (H * C); };
  auto converged = [&](double r) -> std::optional<double> {
    for (double s : stable) {
      if (std::abs(r - s) < kConvergenceTolerance) return s;
    }
    return std::nullopt;
  };

  const double length = x_max.value_or(20.0 * H * std::max(C, 0.01));
  const double h = length / n_steps;
  LayerProfile profile;
  profile.C = C;
  profile.x.push_back(0.0);
  profile.rho.push_back(rho0);
  double rho = rho0;
  for (int k = 0; k < n_steps; ++k) {
    if ((profile.converged_to = converged(rho))) return profile;
    const double k1 = rhs(rho);
    const double k2 = rhs(rho + 0.5 * h * k1);
    const double k3 = rhs(rho + 0.5 * h * k2);
    const double k4 = rhs(rho + h * k3);
    rho += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    profile.x.push_back((k + 1) * h);
    profile.rho.push_back(rho);
    if ((profile.converged_to = converged(rho))) return profile;
    if (!(rho >= 0.0 && rho <= 1.0 - params.delta)) {
      throw LayerBlowUpError("integrate_layer: density left [0, 1 - delta] at x = " +
                                 std::to_string(profile.x.back()),
                             profile);
    }
  }
  return profile;
}

BoundaryResolution resolve_left_boundary(const FundamentalDiagram& diagram,
                                         const ModelParams& params, double g2,
                                         double rho_B) {
  if (!(g2 >= 0.0)) throw DomainError("resolve_left_boundary: g2 must be >= 0");
  require_unit_interval(rho_B, "rho_B");
  const double H = params.H;
  const double rho_star = diagram.rho_star();

  BoundaryResolution res;
  res.side = Side::left;
  bool ingoing = false;
  if (rho_B <= rho_star) {
    ingoing = g2 < left_invariant(diagram, H, rho_star);
    res.boundary_case = ingoing ? BoundaryCase::ingoing : BoundaryCase::transonic;
  } else {
    const double t = diagram.tau(rho_B);
    ingoing = g2 < left_invariant(diagram, H, t);
    res.boundary_case = ingoing ? BoundaryCase::ingoing : BoundaryCase::outgoing;
  }

  switch (res.boundary_case) {
    case BoundaryCase::ingoing: {
      double rho1 = 0.0;
      if (g2 > 0.0) {
        rho1 = bisect([&](double r) { return left_invariant(diagram, H, r) - g2; },
                      0.0, rho_star, "ingoing left boundary");
      }
      res.rho_wall = res.rho_K = rho1;
      res.C = diagram(rho1);
      break;
    }
    case BoundaryCase::transonic:
      res.C = diagram.max_flux();
      res.rho_wall = left_wall_density(H, res.C, g2);
      res.rho_K = rho_star;
      break;
    case BoundaryCase::outgoing:
      res.C = diagram(rho_B);
      res.rho_wall = left_wall_density(H, res.C, g2);
      res.rho_K = rho_B;
      break;
  }
  return res;
}

BoundaryResolution resolve_right_boundary(const FundamentalDiagram& diagram,
                                          const ModelParams& /*params*/,
                                          double g1, double rho_B) {
  require_unit_interval(g1, "g1");
  require_unit_interval(rho_B, "rho_B");
  const double rho_star = diagram.rho_star();
  auto right_invariant = [&](double r) { return r - diagram(r); };

  BoundaryResolution res;
  res.side = Side::right;
  if (rho_B >= rho_star) {
    res.boundary_case = g1 > right_invariant(rho_star) ? BoundaryCase::ingoing
                                                       : BoundaryCase::transonic;
  } else {
    res.boundary_case = g1 > right_invariant(diagram.tau(rho_B))
                            ? BoundaryCase::ingoing
                            : BoundaryCase::outgoing;
  }

  switch (res.boundary_case) {
    case BoundaryCase::ingoing: {
      const double rho2 =
          bisect([&](double r) { return right_invariant(r) - g1; }, rho_star, 1.0,
                 "ingoing right boundary");
      res.rho_wall = res.rho_K = rho2;
      res.C = diagram(rho2);
      break;
    }
    case BoundaryCase::transonic:
      res.C = diagram.max_flux();
      res.rho_wall = g1 + res.C;
      res.rho_K = rho_star;
      break;
    case BoundaryCase::outgoing:
      res.C = diagram(rho_B);
      res.rho_wall = g1 + res.C;
      res.rho_K = rho_B;
      break;
  }
  return res;
}

BoundaryResolution lw_closed_forms(double H, Side side, BoundaryCase c, double g,
                                   double rho_B) {
  if (!(H > 0.0)) throw DomainError("lw_closed_forms: H must be positive");
  BoundaryResolution res;
  res.side = side;
  res.boundary_case = c;
  if (side == Side::left) {
    switch (c) {
      case BoundaryCase::ingoing: {
        double rho1 = 0.0;
        if (H == 1.0) {
          rho1 = g;
        } else if (H == 2.0) {
          rho1 = g / (2.0 + g);
        } else if (H == 3.0) {
          rho1 = g == 0.0 ? 0.0 : (2.0 * g - std::sqrt(12.0 * g + 9.0) + 3.0) / (2.0 * g);
        } else {
          throw DomainError("lw_closed_forms: explicit ingoing-left formula needs "
                            "H in {1, 2, 3}, got " + std::to_string(H));
        }
        res.rho_wall = res.rho_K = rho1;
        res.C = rho1 - rho1 * rho1;
        break;
      }
      case BoundaryCase::transonic:
        res.C = 0.25;
        res.rho_wall = 1.0 - std::pow(H / (4.0 * g), 1.0 / H);
        res.rho_K = 0.5;
        break;
      case BoundaryCase::outgoing:
        res.C = rho_B - rho_B * rho_B;
        res.rho_wall = res.C == 0.0 ? 1.0 : 1.0 - std::pow(H * res.C / g, 1.0 / H);
        res.rho_K = rho_B;
        break;
    }
    return res;
  }
  switch (c) {
    case BoundaryCase::ingoing:
      res.rho_wall = res.rho_K = std::sqrt(g);
      res.C = std::sqrt(g) - g;
      break;
    case BoundaryCase::transonic:
      res.C = 0.25;
      res.rho_wall = g + 0.25;
      res.rho_K = 0.5;
      break;
    case BoundaryCase::outgoing:
      res.C = rho_B - rho_B * rho_B;
      res.rho_wall = g + res.C;
      res.rho_K = rho_B;
      break;
  }
  return res;
}

}  // namespace dvtraffic
