#include "dvtraffic/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <memory>
#include <sstream>
#include <vector>

// pchip.hpp in Boost 1.74 calls isnan unqualified.
#include <boost/math/special_functions/fpclassify.hpp>
#include <boost/math/interpolators/pchip.hpp>

#include "dvtraffic/errors.hpp"
#include "dvtraffic/root_finding.hpp"

namespace dvtraffic {

namespace {

constexpr double kEndpointTolerance = 1e-12;
// Samples this close to rho_star are exempt from the strict sign test on F'.
constexpr double kStarExclusion = 1e-8;

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

std::string to_string(DiagramKind kind) {
  switch (kind) {
    case DiagramKind::lighthill_whitham:
      return "lighthill_whitham";
    case DiagramKind::custom:
      return "custom";
  }
  return "unknown";
}

double FundamentalDiagram::tau(double rho) const {
  if (rho < 0.0 || rho > 1.0) {
    throw DomainError("tau: density " + fmt_double(rho) + " outside [0, 1]");
  }
  if (kind_ == DiagramKind::lighthill_whitham) return 1.0 - rho;
  if (rho == rho_star_) return rho_star_;
  const double target = eval(rho);
  auto g = [&](double r) { return eval(r) - target; };
  if (rho < rho_star_) {
    if (rho == 0.0) return 1.0;
    return bisect(g, rho_star_, 1.0, "tau");
  }
  if (rho == 1.0) return 0.0;
  return bisect(g, 0.0, rho_star_, "tau");
}

bool FundamentalDiagram::is_concave(int n_samples) const {
  constexpr double h = 1e-5;
  for (int k = 0; k <= n_samples; ++k) {
    const double rho = h + (1.0 - 2.0 * h) * k / n_samples;
    const double second = (deriv(rho + h) - deriv(rho - h)) / (2.0 * h);
    if (second > 1e-9) return false;
  }
  return true;
}

FundamentalDiagram make_diagram(DiagramKind kind,
                                const std::optional<CustomDiagram>& custom,
                                int n_samples) {
  FundamentalDiagram d;
  d.kind_ = kind;
  if (kind == DiagramKind::lighthill_whitham) {
    d.eval_ = [](double r) { return r * (1.0 - r); };
    d.deriv_ = [](double r) { return 1.0 - 2.0 * r; };
    d.rho_star_ = 0.5;
    d.max_flux_ = 0.25;
    d.label_ = "lw";
    return d;
  }

  if (!custom || !custom->eval || !custom->deriv) {
    throw DiagramError("custom diagram requires eval and deriv functions");
  }
  if (n_samples < 10) {
    throw DiagramError("custom diagram validation needs at least 10 samples");
  }
  d.eval_ = custom->eval;
  d.deriv_ = custom->deriv;
  d.label_ = custom->label;

  if (std::abs(d.eval(0.0)) > kEndpointTolerance) {
    throw DiagramError("F(0) = " + fmt_double(d.eval(0.0)) + ", expected 0");
  }
  if (std::abs(d.eval(1.0)) > kEndpointTolerance) {
    throw DiagramError("F(1) = " + fmt_double(d.eval(1.0)) + ", expected 0");
  }

  if (custom->rho_star) {
    d.rho_star_ = *custom->rho_star;
  } else {
    if (!(d.deriv(0.0) > 0.0) || !(d.deriv(1.0) < 0.0)) {
      throw DiagramError(
          "F' must be positive at rho=0 and negative at rho=1 (got " +
          fmt_double(d.deriv(0.0)) + ", " + fmt_double(d.deriv(1.0)) + ")");
    }
    d.rho_star_ = bisect(d.deriv_, 0.0, 1.0, "critical density");
  }
  if (!(d.rho_star_ > 0.0 && d.rho_star_ < 1.0)) {
    throw DiagramError("critical density " + fmt_double(d.rho_star_) +
                       " outside (0, 1)");
  }

  for (int k = 0; k <= n_samples; ++k) {
    const double rho = static_cast<double>(k) / n_samples;
    const double f = d.eval(rho);
    if (!(f >= -kEndpointTolerance && f <= 1.0 + kEndpointTolerance)) {
      throw DiagramError("F(" + fmt_double(rho) + ") = " + fmt_double(f) +
                         " outside [0, 1]");
    }
    if (std::abs(rho - d.rho_star_) <= kStarExclusion) continue;
    const double fp = d.deriv(rho);
    const bool ok = rho < d.rho_star_ ? fp > 0.0 : fp < 0.0;
    if (!ok) {
      throw DiagramError("unimodality violated: F'(" + fmt_double(rho) +
                         ") = " + fmt_double(fp) + " with rho_star = " +
                         fmt_double(d.rho_star_));
    }
  }
  d.max_flux_ = d.eval(d.rho_star_);
  return d;
}

FundamentalDiagram lighthill_whitham() {
  return make_diagram(DiagramKind::lighthill_whitham);
}

FundamentalDiagram diagram_from_samples(std::span<const double> rho,
                                        std::span<const double> flux,
                                        std::string label) {
  if (rho.size() != flux.size()) {
    throw DiagramError("sample columns differ in length");
  }
  if (rho.size() < 4) {
    throw DiagramError("at least 4 (rho, F) samples are required");
  }
  if (!std::is_sorted(rho.begin(), rho.end()) ||
      std::adjacent_find(rho.begin(), rho.end()) != rho.end()) {
    throw DiagramError("sample densities must be strictly increasing");
  }
  if (rho.front() != 0.0 || rho.back() != 1.0) {
    throw DiagramError("samples must span exactly [0, 1]");
  }
  using Pchip = boost::math::interpolators::pchip<std::vector<double>>;
  auto spline = std::make_shared<const Pchip>(
      std::vector<double>(rho.begin(), rho.end()),
      std::vector<double>(flux.begin(), flux.end()));
  CustomDiagram custom;
  custom.eval = [spline](double r) { return (*spline)(r); };
  custom.deriv = [spline](double r) { return spline->prime(r); };
  custom.label = std::move(label);
  return make_diagram(DiagramKind::custom, custom);
}

FundamentalDiagram load_diagram_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DiagramError("cannot open diagram file '" + path + "'");
  std::vector<double> rho;
  std::vector<double> flux;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double r = 0.0;
    double f = 0.0;
    if (!(ls >> r >> f)) {
      if (rho.empty() && line_no == 1) continue;  // header
      throw DiagramError(path + ":" + std::to_string(line_no) +
                         ": expected two numeric columns");
    }
    rho.push_back(r);
    flux.push_back(f);
  }
  return diagram_from_samples(rho, flux, path);
}

}  // namespace dvtraffic
