#include "dvtraffic/scenarios.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "dvtraffic/errors.hpp"
#include "dvtraffic/metrics.hpp"
#include "dvtraffic/riemann.hpp"

namespace dvtraffic {

namespace {

ScenarioCase riemann_case(std::string label, double rho_l, double rho_r) {
  return {std::move(label), {rho_l, 0.0}, {rho_r, 0.0}, 0.5, false, {}};
}

BoundarySpec prescribed(double g2, double g1) {
  return {BoundaryCondition::prescribed(g2), BoundaryCondition::prescribed(g1)};
}

std::vector<Scenario> make_builtins() {
  const ScenarioCase rare = riemann_case("rarefaction", 0.99, 0.0);
  const ScenarioCase shock = riemann_case("shock", 0.3, 0.99);
  const double inf = std::numeric_limits<double>::infinity();

  std::vector<Scenario> all;

  Scenario s;
  s.name = "riemann-rarefaction";
  s.summary = "rho 0.99 | 0, q = 0";
  s.cases = {rare};
  all.push_back(s);

  s = {};
  s.name = "riemann-shock";
  s.summary = "rho 0.3 | 0.99, q = 0";
  s.cases = {shock};
  all.push_back(s);

  s = {};
  s.name = "equilibrium-shock";
  s.summary = "rho 0.3 | 0.99 with q = F(rho); shock speed independent of epsilon";
  s.cases = {{"shock", {0.3, 0.0}, {0.99, 0.0}, 0.5, true, {}}};
  s.epsilon_values = {0.5, 0.001};
  all.push_back(s);

  s = {};
  s.name = "eps-sweep";
  s.summary = "both Riemann problems, H = 1, epsilon from 0.5 to 0.001";
  s.cases = {rare, shock};
  s.epsilon_values = {0.5, 0.1, 0.01, 0.001};
  all.push_back(s);

  s = {};
  s.name = "H-sweep";
  s.summary = "both Riemann problems, epsilon = 0.1, H in {1, 1.5, 2, 5}";
  s.cases = {rare, shock};
  s.H_values = {1.0, 1.5, 2.0, 5.0};
  all.push_back(s);

  s = {};
  s.name = "bvp-layers";
  s.summary = "boundary layers: outgoing/outgoing, then transonic/ingoing";
  s.cases = {
      {"outgoing", {0.9, 0.0}, {0.2, 0.0}, 0.5, true, prescribed(0.5, 0.3)},
      {"transonic", {0.2, 0.0}, {0.9, 0.0}, 0.5, true, prescribed(0.75, 0.8)},
  };
  s.epsilon_values = {0.1, 0.01, 0.001};
  s.reference = ReferenceKind::boundary;
  all.push_back(s);

  s = {};
  s.name = "scheme-compare";
  s.summary = "Lax-Friedrichs, Godunov and relaxed schemes on both Riemann problems";
  s.cases = {rare, shock};
  s.schemes = {Scheme::lxf, Scheme::godunov, Scheme::relaxed};
  all.push_back(s);

  s = {};
  s.name = "cluster";
  s.summary = "small H against the constrained H = 0 solution, no relaxation";
  s.cases = {
      {"jam", {0.7, 0.7}, {0.7, 0.2}, 0.5, false, {}},
      {"linear", {0.7, 0.3}, {0.7, 0.2}, 0.5, false, {}},
  };
  s.H_values = {1.0, 0.5, 0.1};
  s.epsilon_values = {inf};
  s.reference = ReferenceKind::cluster;
  s.t_end = 0.2;
  all.push_back(s);

  return all;
}

std::optional<double> try_front(const GridSolution& sol, double level) {
  try {
    return front_position(sol, level);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace

const std::vector<Scenario>& builtin_scenarios() {
  static const std::vector<Scenario> all = make_builtins();
  return all;
}

const Scenario& find_scenario(const std::string& name) {
  for (const Scenario& s : builtin_scenarios()) {
    if (s.name == name) return s;
  }
  throw DomainError("unknown scenario '" + name + "'");
}

std::vector<RunConfig> expand(const Scenario& scenario,
                              const RunOverrides& o) {
  std::vector<RunConfig> runs;
  std::vector<std::size_t> cases;
  if (o.case_index) {
    if (*o.case_index >= scenario.cases.size()) {
      throw DomainError("scenario '" + scenario.name + "' has no case " +
                        std::to_string(*o.case_index));
    }
    cases.push_back(*o.case_index);
  } else {
    for (std::size_t i = 0; i < scenario.cases.size(); ++i) cases.push_back(i);
  }
  const std::vector<Scheme> schemes =
      o.scheme ? std::vector<Scheme>{*o.scheme} : scenario.schemes;
  const std::vector<double> Hs =
      o.H ? std::vector<double>{*o.H} : scenario.H_values;
  const std::vector<double> eps =
      o.epsilon ? std::vector<double>{*o.epsilon} : scenario.epsilon_values;

  for (std::size_t c : cases) {
    for (Scheme scheme : schemes) {
      RunConfig base;
      base.scenario = scenario.name;
      base.case_index = c;
      base.scheme = scheme;
      base.cells = o.cells.value_or(scenario.n_cells);
      base.cfl = o.cfl.value_or(scenario.cfl);
      base.t_end = o.t_end.value_or(scenario.t_end);
      base.diagram = o.diagram;
      if (!is_kinetic(scheme)) {
        base.H = o.H.value_or(1.0);
        base.epsilon = 0.0;
        runs.push_back(base);
        continue;
      }
      for (double H : Hs) {
        for (double e : eps) {
          RunConfig r = base;
          r.H = H;
          r.epsilon = e;
          runs.push_back(r);
        }
      }
    }
  }
  return runs;
}

FundamentalDiagram load_diagram_spec(const std::string& spec) {
  if (spec == "lw") return lighthill_whitham();
  return load_diagram_csv(spec);
}

GridSolution initial_grid(const Scenario& scenario, const ScenarioCase& c,
                          const FundamentalDiagram& diagram,
                          const ModelParams& params, std::size_t cells) {
  GridSolution g(diagram, params, scenario.x_lo, scenario.x_hi, cells);
  MacroState l = c.left;
  MacroState r = c.right;
  if (c.equilibrium) {
    l.q = diagram(l.rho);
    r.q = diagram(r.rho);
  }
  g.fill([&](double x) { return x < c.x_jump ? l : r; });
  return g;
}

RunReport run_config(const RunConfig& config) {
  const Scenario& scenario = find_scenario(config.scenario);
  if (config.case_index >= scenario.cases.size()) {
    throw DomainError("scenario '" + scenario.name + "' has no case " +
                      std::to_string(config.case_index));
  }
  const ScenarioCase& c = scenario.cases[config.case_index];
  const FundamentalDiagram diagram = load_diagram_spec(config.diagram);
  ModelParams params;
  params.H = config.H;
  params.epsilon = config.epsilon;
  params.validate();

  const GridSolution init =
      initial_grid(scenario, c, diagram, params, config.cells);
  const auto start = std::chrono::steady_clock::now();
  SimulationResult sim =
      run_simulation(init, c.bc, config.scheme, config.t_end, config.cfl);
  const auto stop = std::chrono::steady_clock::now();

  RunReport rep{config, c.label, c.bc, std::move(sim.solution), std::move(sim.log)};
  rep.seconds = std::chrono::duration<double>(stop - start).count();

  const GridSolution& sol = rep.solution;
  switch (scenario.reference) {
    case ReferenceKind::lwr: {
      const LwrFan fan = solve_riemann_lwr(diagram, c.left.rho, c.right.rho);
      const ReferenceSolution ref =
          lwr_reference(fan, scenario.x_lo, scenario.x_hi, c.x_jump);
      rep.l1 = l1_error(sol, ref, sol.t);
      rep.linf = linf_error(sol, ref, sol.t);
      rep.front_level = 0.5 * (c.left.rho + c.right.rho);
      rep.front = try_front(sol, *rep.front_level);
      break;
    }
    case ReferenceKind::cluster: {
      const ClusterFan fan = solve_riemann_cluster(c.left, c.right);
      const ReferenceSolution ref =
          cluster_reference(fan, scenario.x_lo, scenario.x_hi, c.x_jump);
      rep.l1 = l1_error(sol, ref, sol.t);
      rep.linf = linf_error(sol, ref, sol.t);
      break;
    }
    case ReferenceKind::boundary: {
      if (c.bc.left.kind == BoundaryCondition::Kind::prescribed) {
        rep.left_layer = resolve_left_boundary(diagram, params, c.bc.left.value,
                                               init.rho.front());
      }
      if (c.bc.right.kind == BoundaryCondition::Kind::prescribed) {
        rep.right_layer = resolve_right_boundary(
            diagram, params, c.bc.right.value, init.rho.back());
      }
      break;
    }
  }
  return rep;
}

}  // namespace dvtraffic
