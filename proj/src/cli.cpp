#include "dvtraffic/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <optional>

#include "CLI11.hpp"

#include "dvtraffic/boundary_layer.hpp"
#include "dvtraffic/errors.hpp"
#include "dvtraffic/io.hpp"
#include "dvtraffic/riemann.hpp"
#include "dvtraffic/scenarios.hpp"

namespace dvtraffic {

namespace {

/// Thrown for argument problems found after CLI11 parsing succeeded.
struct BadArgument : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunOptions {
  std::string scenario;
  std::string scheme;
  std::optional<double> H;
  std::string epsilon;
  std::optional<std::size_t> cells;
  std::optional<double> cfl;
  std::optional<double> t_end;
  std::optional<std::size_t> case_index;
  std::string out = "out";
  std::string diagram = "lw";
};

void add_run_options(CLI::App* cmd, RunOptions& o, const std::string& scenario) {
  o.scenario = scenario;
  cmd->add_option("--scenario", o.scenario, "builtin scenario name")
      ->capture_default_str();
  cmd->add_option("--scheme", o.scheme, "relaxation|relaxed|lxf|godunov")
      ->check(CLI::IsMember({"relaxation", "relaxed", "lxf", "godunov"}));
  cmd->add_option("--H", o.H, "nonlinearity exponent")->check(CLI::PositiveNumber);
  cmd->add_option("--epsilon", o.epsilon, "relaxation time (number or inf)");
  cmd->add_option("--cells", o.cells, "number of cells")->check(CLI::Range(2, 100000000));
  cmd->add_option("--cfl", o.cfl, "CFL number in (0, 1]")->check(CLI::Range(1e-6, 1.0));
  cmd->add_option("--t-end", o.t_end, "final time")->check(CLI::PositiveNumber);
  cmd->add_option("--case", o.case_index, "run only this case of the scenario");
  cmd->add_option("--out", o.out, "output directory")->capture_default_str();
  cmd->add_option("--diagram", o.diagram, "lw or a two-column CSV file")
      ->capture_default_str();
}

double parse_epsilon(const std::string& text) {
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || !(v >= 0.0)) {
    throw BadArgument("--epsilon: expected a nonnegative number or inf, got '" +
                      text + "'");
  }
  return v;
}

std::vector<RunConfig> plan(const RunOptions& o) {
  const Scenario* scenario = nullptr;
  try {
    scenario = &find_scenario(o.scenario);
  } catch (const DomainError& e) {
    throw BadArgument(e.what());
  }
  RunOverrides ov;
  if (!o.scheme.empty()) ov.scheme = parse_scheme(o.scheme);
  ov.H = o.H;
  if (!o.epsilon.empty()) ov.epsilon = parse_epsilon(o.epsilon);
  ov.cells = o.cells;
  ov.cfl = o.cfl;
  ov.t_end = o.t_end;
  ov.case_index = o.case_index;
  ov.diagram = o.diagram;
  try {
    return expand(*scenario, ov);
  } catch (const DomainError& e) {
    throw BadArgument(e.what());
  }
}

/// Runs every config; a failing run is reported and the sweep goes on.
int execute(const std::vector<RunConfig>& runs, const std::string& dir,
            std::ostream& out, std::ostream& err) {
  int status = kExitOk;
  for (const RunConfig& c : runs) {
    try {
      const RunReport rep = run_config(c);
      write_run(rep, dir);
      out << summary_line(rep) << '\n';
    } catch (const SolverError& e) {
      err << "solver error in " << run_stem(c) << ": " << e.what() << '\n';
      status = kExitSolverError;
    }
  }
  return status;
}

void print_cluster_fans(const RunOptions& o, std::ostream& out) {
  const Scenario& s = find_scenario(o.scenario);
  if (s.reference != ReferenceKind::cluster) return;
  for (const ScenarioCase& c : s.cases) {
    const ClusterFan fan = solve_riemann_cluster(c.left, c.right);
    out << "H=0 " << c.label << ": middle=(" << fan.middle.rho << ','
        << fan.middle.q << ')';
    if (fan.regime == ClusterRegime::constrained) {
      out << " shock_speed=" << fan.shock_speed;
    }
    out << '\n';
  }
}

int run_layer(const std::string& side_name, double g, double rho_b, double H,
              const std::string& diagram_spec, const std::string& out_dir,
              std::ostream& out) {
  const FundamentalDiagram d = load_diagram_spec(diagram_spec);
  ModelParams params;
  params.H = H;
  const Side side = side_name == "left" ? Side::left : Side::right;
  const BoundaryResolution r = side == Side::left
                                   ? resolve_left_boundary(d, params, g, rho_b)
                                   : resolve_right_boundary(d, params, g, rho_b);
  out << to_string(side) << ' ' << to_string(r.boundary_case)
      << " rho_wall=" << r.rho_wall << " rho_K=" << r.rho_K << " C=" << r.C << '\n';
  if (out_dir.empty()) return kExitOk;
  const LayerProfile p = integrate_layer(d, params, r.C, r.rho_wall, side);
  std::string csv = "y,rho\n";
  char buf[64];
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", p.x[i], p.rho[i]);
    csv += buf;
  }
  std::filesystem::create_directories(out_dir);
  const std::filesystem::path path =
      std::filesystem::path(out_dir) / ("layer_" + std::string(to_string(side)) + ".csv");
  write_file(path, csv);
  out << "wrote " << path.string() << '\n';
  return kExitOk;
}

int run_check_subchar(const std::string& diagram_spec, double H, std::ostream& out) {
  const FundamentalDiagram d = load_diagram_spec(diagram_spec);
  ModelParams params;
  params.H = H;
  const SubcharacteristicReport r = check_subcharacteristic(d, params);
  out << "subcharacteristic " << (r.pass ? "PASS" : "FAIL") << " diagram="
      << d.label() << " H=" << H << " margin=" << r.margin
      << " worst_rho=" << r.worst_rho;
  if (r.first_violation) out << " first_violation=" << *r.first_violation;
  out << " samples=" << r.n_samples << '\n';
  return r.pass ? kExitOk : kExitSolverError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Two-velocity relaxation traffic model: scenarios and analyses",
               "dvtraffic"};
  app.require_subcommand(1);

  RunOptions riemann_o, bvp_o, compare_o, cluster_o;
  CLI::App* riemann = app.add_subcommand("riemann", "Riemann problem runs");
  add_run_options(riemann, riemann_o, "riemann-shock");
  CLI::App* bvp = app.add_subcommand("bvp", "boundary value problem runs");
  add_run_options(bvp, bvp_o, "bvp-layers");
  CLI::App* compare = app.add_subcommand("compare-schemes", "scalar scheme comparison");
  add_run_options(compare, compare_o, "scheme-compare");
  CLI::App* cluster = app.add_subcommand("cluster", "small-H runs against the H = 0 solution");
  add_run_options(cluster, cluster_o, "cluster");

  std::string side = "left";
  double g = 0.0;
  double rho_b = 0.0;
  double layer_H = 1.0;
  std::string layer_diagram = "lw";
  std::string layer_out;
  CLI::App* layer = app.add_subcommand("layer", "classify and integrate a boundary layer");
  layer->add_option("--side", side)->check(CLI::IsMember({"left", "right"}))->capture_default_str();
  layer->add_option("--g", g, "g2 on the left, g1 on the right")->required();
  layer->add_option("--rho-b", rho_b, "interior density")->required()->check(CLI::Range(0.0, 1.0));
  layer->add_option("--H", layer_H)->check(CLI::PositiveNumber)->capture_default_str();
  layer->add_option("--diagram", layer_diagram)->capture_default_str();
  layer->add_option("--out", layer_out, "write the layer profile here");

  double sub_H = 1.0;
  std::string sub_diagram = "lw";
  CLI::App* subchar = app.add_subcommand("check-subchar", "subcharacteristic audit");
  subchar->add_option("--H", sub_H)->check(CLI::PositiveNumber)->capture_default_str();
  subchar->add_option("--diagram", sub_diagram)->capture_default_str();

  CLI::App* list = app.add_subcommand("list", "print builtin scenarios");

  std::string manifest;
  std::string replay_out = "out";
  CLI::App* replay = app.add_subcommand("replay", "rerun a run manifest");
  replay->add_option("manifest", manifest)->required();
  replay->add_option("--out", replay_out)->capture_default_str();

  std::vector<const char*> argv{"dvtraffic"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitBadArguments;
  }

  try {
    if (*list) {
      for (const Scenario& s : builtin_scenarios()) {
        out << s.name << "  " << s.summary << '\n';
      }
      return kExitOk;
    }
    if (*subchar) return run_check_subchar(sub_diagram, sub_H, out);
    if (*layer) return run_layer(side, g, rho_b, layer_H, layer_diagram, layer_out, out);
    if (*replay) {
      RunConfig c;
      try {
        c = parse_manifest(read_file(manifest));
      } catch (const DomainError& e) {
        throw BadArgument(e.what());
      }
      return execute({c}, replay_out, out, err);
    }
    for (auto [cmd, o] : {std::pair{riemann, &riemann_o}, std::pair{bvp, &bvp_o},
                          std::pair{compare, &compare_o}, std::pair{cluster, &cluster_o}}) {
      if (!*cmd) continue;
      const std::vector<RunConfig> runs = plan(*o);
      if (cmd == cluster) print_cluster_fans(*o, out);
      return execute(runs, o->out, out, err);
    }
    return kExitOk;
  } catch (const BadArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadArguments;
  } catch (const std::exception& e) {
    err << "solver error: " << e.what() << '\n';
    return kExitSolverError;
  }
}

}  // namespace dvtraffic
