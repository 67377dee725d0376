#ifndef DVTRAFFIC_DIAGRAM_HPP
#define DVTRAFFIC_DIAGRAM_HPP

#include <functional>
#include <optional>
#include <span>
#include <string>

namespace dvtraffic {

enum class DiagramKind { lighthill_whitham, custom };

std::string to_string(DiagramKind kind);

/// User-supplied flux law for DiagramKind::custom.
struct CustomDiagram {
  std::function<double(double)> eval;
  std::function<double(double)> deriv;
  /// Known critical density; located by bisection on deriv when empty.
  std::optional<double> rho_star;
  std::string label = "custom";
};

/// Equilibrium flux-density relation F on [0, 1].
///
/// F(0) = F(1) = 0, F is increasing below the critical density rho_star and
/// decreasing above it. Instances are immutable and validated on
/// construction (see make_diagram), so every consumer may rely on the
/// unimodality invariant.
class FundamentalDiagram {
 public:
  double eval(double rho) const { return eval_(rho); }
  double operator()(double rho) const { return eval_(rho); }
  double deriv(double rho) const { return deriv_(rho); }
  double rho_star() const { return rho_star_; }
  double max_flux() const { return max_flux_; }
  DiagramKind kind() const { return kind_; }
  const std::string& label() const { return label_; }

  /// The density on the other side of rho_star carrying the same flux.
  double tau(double rho) const;

  /// Sampled concavity check: F'' <= 1e-9 on an interior grid.
  bool is_concave(int n_samples = 10000) const;

 private:
  friend FundamentalDiagram make_diagram(DiagramKind,
                                         const std::optional<CustomDiagram>&,
                                         int);
  FundamentalDiagram() = default;

  std::function<double(double)> eval_;
  std::function<double(double)> deriv_;
  double rho_star_ = 0.5;
  double max_flux_ = 0.25;
  DiagramKind kind_ = DiagramKind::lighthill_whitham;
  std::string label_ = "lw";
};

inline constexpr int kDiagramValidationSamples = 10000;

/// Builds and validates a diagram. Throws DiagramError with a diagnostic when
/// F(0), F(1) or the unimodality check fails on the sample grid.
FundamentalDiagram make_diagram(
    DiagramKind kind, const std::optional<CustomDiagram>& custom = std::nullopt,
    int n_samples = kDiagramValidationSamples);

/// F(rho) = rho (1 - rho).
FundamentalDiagram lighthill_whitham();

/// Monotone (PCHIP) interpolant through (rho, F) samples, validated as a
/// custom diagram. Samples must be sorted by rho and cover [0, 1].
FundamentalDiagram diagram_from_samples(std::span<const double> rho,
                                        std::span<const double> flux,
                                        std::string label = "samples");

/// Reads a two-column CSV of (rho, F) samples; a non-numeric first line is
/// treated as a header.
FundamentalDiagram load_diagram_csv(const std::string& path);

/// τ(rho) for a diagram; free-function spelling of FundamentalDiagram::tau.
inline double tau(const FundamentalDiagram& diagram, double rho) {
  return diagram.tau(rho);
}

}  // namespace dvtraffic

#endif  // DVTRAFFIC_DIAGRAM_HPP
