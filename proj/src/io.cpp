#include "dvtraffic/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include "json.hpp"

#include "dvtraffic/errors.hpp"

namespace dvtraffic {

namespace {

using nlohmann::json;

void append_number(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  out += buf;
}

double parse_double(const std::string& field, std::size_t line) {
  char* end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (field.empty() || end != field.c_str() + field.size()) {
    throw DomainError("profile csv line " + std::to_string(line) +
                      ": bad number '" + field + "'");
  }
  return v;
}

json number_or_inf(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double read_number(const json& j, const char* key) {
  if (!j.contains(key)) throw DomainError(std::string("manifest: missing '") + key + "'");
  const json& v = j.at(key);
  if (v.is_number()) return v.get<double>();
  if (v.is_string() && v.get<std::string>() == "inf") {
    return std::numeric_limits<double>::infinity();
  }
  throw DomainError(std::string("manifest: '") + key + "' is not a number");
}

std::string compact(double v) {
  if (std::isinf(v)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

json layer_json(const BoundaryResolution& r) {
  return {{"case", to_string(r.boundary_case)},
          {"rho_wall", r.rho_wall},
          {"rho_K", r.rho_K},
          {"C", r.C}};
}

}  // namespace

std::string profile_csv(const GridSolution& sol, bool with_z) {
  std::string out = with_z ? "x,rho,q,z\n" : "x,rho,q\n";
  out.reserve(out.size() + sol.n_cells() * 64);
  for (std::size_t i = 0; i < sol.n_cells(); ++i) {
    append_number(out, sol.x_center(i));
    out += ',';
    append_number(out, sol.rho[i]);
    out += ',';
    append_number(out, sol.q[i]);
    if (with_z) {
      out += ',';
      append_number(out, to_conservative(sol.cell(i), sol.params).z);
    }
    out += '\n';
  }
  return out;
}

Profile parse_profile_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw DomainError("profile csv: empty input");
  bool with_z = false;
  if (line == "x,rho,q,z") {
    with_z = true;
  } else if (line != "x,rho,q") {
    throw DomainError("profile csv: unexpected header '" + line + "'");
  }
  Profile p;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    if (fields.size() != (with_z ? 4u : 3u)) {
      throw DomainError("profile csv line " + std::to_string(line_no) +
                        ": wrong column count");
    }
    p.x.push_back(parse_double(fields[0], line_no));
    p.rho.push_back(parse_double(fields[1], line_no));
    p.q.push_back(parse_double(fields[2], line_no));
    if (with_z) p.z.push_back(parse_double(fields[3], line_no));
  }
  return p;
}

std::string manifest_json(const RunReport& report,
                          const std::vector<std::string>& outputs) {
  const RunConfig& c = report.config;
  json j;
  j["scenario"] = c.scenario;
  j["case"] = c.case_index;
  j["case_label"] = report.case_label;
  j["scheme"] = to_string(c.scheme);
  j["H"] = c.H;
  j["epsilon"] = number_or_inf(c.epsilon);
  j["cells"] = c.cells;
  j["cfl"] = c.cfl;
  j["t_end"] = c.t_end;
  j["bc"] = describe(report.bc);
  j["seed"] = nullptr;
  j["diagram"] = c.diagram;
  j["outputs"] = outputs;

  json m;
  m["steps"] = report.log.steps();
  m["rho_min"] = report.log.rho_min;
  m["rho_max"] = report.log.rho_max;
  m["q_min"] = report.log.q_min;
  m["q_max"] = report.log.q_max;
  if (report.l1) m["l1"] = *report.l1;
  if (report.linf) m["linf"] = *report.linf;
  if (report.front_level) m["front_level"] = *report.front_level;
  if (report.front) m["front"] = *report.front;
  if (report.left_layer) m["left_layer"] = layer_json(*report.left_layer);
  if (report.right_layer) m["right_layer"] = layer_json(*report.right_layer);
  j["metrics"] = m;
  return j.dump(2) + "\n";
}

RunConfig parse_manifest(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw DomainError(std::string("manifest: ") + e.what());
  }
  if (!j.is_object()) throw DomainError("manifest: expected a JSON object");
  RunConfig c;
  try {
    c.scenario = j.at("scenario").get<std::string>();
    c.case_index = j.value("case", std::size_t{0});
    c.scheme = parse_scheme(j.at("scheme").get<std::string>());
    c.cells = j.at("cells").get<std::size_t>();
    c.diagram = j.value("diagram", std::string("lw"));
  } catch (const json::exception& e) {
    throw DomainError(std::string("manifest: ") + e.what());
  }
  c.H = read_number(j, "H");
  c.epsilon = read_number(j, "epsilon");
  c.cfl = read_number(j, "cfl");
  c.t_end = read_number(j, "t_end");
  return c;
}

std::string run_stem(const RunConfig& c) {
  std::string stem = c.scenario + "_" + std::to_string(c.case_index) + "_" +
                     to_string(c.scheme);
  if (is_kinetic(c.scheme)) {
    stem += "_H" + compact(c.H) + "_eps" + compact(c.epsilon);
  }
  return stem;
}

std::vector<std::filesystem::path> write_run(const RunReport& report,
                                             const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const std::string stem = run_stem(report.config);
  const std::filesystem::path csv = dir / (stem + ".csv");
  const std::filesystem::path manifest = dir / (stem + ".json");
  write_file(csv, profile_csv(report.solution, is_kinetic(report.config.scheme)));
  write_file(manifest, manifest_json(report, {csv.filename().string()}));
  return {csv, manifest};
}

std::string summary_line(const RunReport& r) {
  std::ostringstream os;
  os << r.config.scenario << '[' << r.case_label << "] " << to_string(r.config.scheme);
  if (is_kinetic(r.config.scheme)) {
    os << " H=" << compact(r.config.H) << " eps=" << compact(r.config.epsilon);
  }
  os << " cells=" << r.config.cells << " t=" << r.solution.t
     << " steps=" << r.log.steps();
  if (r.l1) os << " L1=" << *r.l1;
  if (r.linf) os << " Linf=" << *r.linf;
  if (r.front) os << " front(" << *r.front_level << ")=" << *r.front;
  if (r.left_layer) {
    os << " left=" << to_string(r.left_layer->boundary_case)
       << " rho_K=" << r.left_layer->rho_K << " first_cell=" << r.solution.rho.front();
  }
  if (r.right_layer) {
    os << " right=" << to_string(r.right_layer->boundary_case)
       << " rho_K=" << r.right_layer->rho_K << " last_cell=" << r.solution.rho.back();
  }
  os.precision(3);
  os << " time=" << r.seconds << "s";
  return os.str();
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path.string() + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw DomainError("write failed for '" + path.string() + "'");
}

}  // namespace dvtraffic
