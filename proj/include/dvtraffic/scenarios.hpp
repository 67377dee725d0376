#ifndef DVTRAFFIC_SCENARIOS_HPP
#define DVTRAFFIC_SCENARIOS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "dvtraffic/boundary_layer.hpp"
#include "dvtraffic/grid.hpp"
#include "dvtraffic/simulation.hpp"

namespace dvtraffic {

/// Piecewise constant initial data: `left` on x < x_jump, `right` after.
struct ScenarioCase {
  std::string label;
  MacroState left;
  MacroState right;
  double x_jump = 0.5;
  /// Replace q by F(rho) on both sides.
  bool equilibrium = false;
  BoundarySpec bc;
};

enum class ReferenceKind { lwr, cluster, boundary };

struct Scenario {
  std::string name;
  std::string summary;
  std::vector<ScenarioCase> cases;
  std::vector<double> H_values{1.0};
  std::vector<double> epsilon_values{0.1};
  std::vector<Scheme> schemes{Scheme::relaxation};
  ReferenceKind reference = ReferenceKind::lwr;
  double t_end = 0.4;
  std::size_t n_cells = 1000;
  double cfl = 1.0;
  double x_lo = 0.0;
  double x_hi = 1.0;
};

const std::vector<Scenario>& builtin_scenarios();
/// Throws DomainError for unknown names.
const Scenario& find_scenario(const std::string& name);

/// One fully specified run. `diagram` is "lw" or a CSV path.
struct RunConfig {
  std::string scenario;
  std::size_t case_index = 0;
  Scheme scheme = Scheme::relaxation;
  double H = 1.0;
  double epsilon = 0.1;
  std::size_t cells = 1000;
  double cfl = 1.0;
  double t_end = 0.4;
  std::string diagram = "lw";
};

/// Optional overrides applied on top of a scenario's sweep lists.
struct RunOverrides {
  std::optional<Scheme> scheme;
  std::optional<double> H;
  std::optional<double> epsilon;
  std::optional<std::size_t> cells;
  std::optional<double> cfl;
  std::optional<double> t_end;
  std::optional<std::size_t> case_index;
  std::string diagram = "lw";
};

/// Cartesian product cases x schemes x H x epsilon. Scalar schemes ignore
/// H and epsilon and contribute one run per case.
std::vector<RunConfig> expand(const Scenario& scenario,
                              const RunOverrides& overrides = {});

struct RunReport {
  RunConfig config;
  std::string case_label;
  BoundarySpec bc;
  GridSolution solution;
  StepLog log;
  std::optional<double> l1{};
  std::optional<double> linf{};
  std::optional<double> front_level{};
  std::optional<double> front{};
  /// Predicted layer structure for prescribed boundaries.
  std::optional<BoundaryResolution> left_layer{};
  std::optional<BoundaryResolution> right_layer{};
  double seconds = 0.0;
};

/// "lw" or a two-column CSV path.
FundamentalDiagram load_diagram_spec(const std::string& spec);

GridSolution initial_grid(const Scenario& scenario, const ScenarioCase& c,
                          const FundamentalDiagram& diagram,
                          const ModelParams& params, std::size_t cells);

RunReport run_config(const RunConfig& config);

}  // namespace dvtraffic

#endif  // DVTRAFFIC_SCENARIOS_HPP
