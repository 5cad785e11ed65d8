#include "momg/scenario.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace momg {

namespace {

using nlohmann::json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

[[noreturn]] void bad_key(const std::string& key, const std::string& what) {
  throw ConfigError("config: key '" + key + "' " + what);
}

void check_keys(const json& j, const std::string& where,
                std::initializer_list<const char*> allowed) {
  for (const auto& item : j.items()) {
    bool known = false;
    for (const char* k : allowed)
      if (item.key() == k) {
        known = true;
        break;
      }
    if (!known)
      throw ConfigError("config: unknown key '" +
                        (where.empty() ? item.key() : where + "." + item.key()) +
                        "'");
  }
}

double get_number(const json& j, const std::string& key, double fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number()) bad_key(key, "must be a number");
  return v.get<double>();
}

int get_int(const json& j, const std::string& key, int fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_number_integer()) bad_key(key, "must be an integer");
  return v.get<int>();
}

std::string get_string(const json& j, const std::string& key,
                       const std::string& fallback) {
  if (!j.contains(key)) return fallback;
  const json& v = j.at(key);
  if (!v.is_string()) bad_key(key, "must be a string");
  return v.get<std::string>();
}

CollisionKind collision_from_string(const std::string& name) {
  if (name == "bgk") return CollisionKind::bgk;
  if (name == "es_bgk") return CollisionKind::es_bgk;
  if (name == "shakhov") return CollisionKind::shakhov;
  throw ConfigError("config: unknown collision model '" + name + "'");
}

const char* collision_name(CollisionKind kind) {
  switch (kind) {
    case CollisionKind::bgk:
      return "bgk";
    case CollisionKind::es_bgk:
      return "es_bgk";
    case CollisionKind::shakhov:
      return "shakhov";
  }
  return "unknown";
}

void apply_wall(const json& j, const std::string& where, WallSetting& wall) {
  if (!j.is_object()) bad_key(where, "must be an object");
  check_keys(j, where, {"speed", "temperature"});
  wall.speed = get_number(j, "speed", wall.speed);
  wall.temperature = get_number(j, "temperature", wall.temperature);
}

void validate_config(const ScenarioConfig& c) {
  if (c.moment_order < 3)
    throw ConfigError("config: moment_order must be at least 3");
  if (c.nx < 1 || c.ny < 1) throw ConfigError("config: nx and ny must be positive");
  if (c.space_order != 1 && c.space_order != 2)
    throw ConfigError("config: order must be 1 or 2");
  if (!(c.cfl > 0.0) || c.cfl > 1.0)
    throw ConfigError("config: cfl must lie in (0, 1]");
  if (!(c.tol > 0.0)) throw ConfigError("config: tol must be positive");
  if (c.max_iterations < 0)
    throw ConfigError("config: max_iterations must be nonnegative");
  if (c.levels < 0) throw ConfigError("config: levels must be nonnegative");
  if (c.threads < 1) throw ConfigError("config: threads must be positive");
  if (!(c.collision.prandtl > 0.0))
    throw ConfigError("config: prandtl must be positive");
  if (!(c.gas.knudsen > 0.0)) throw ConfigError("config: knudsen must be positive");
  if (!(c.gas.viscosity_index > 0.0))
    throw ConfigError("config: viscosity_index must be positive");
  if (!(c.gas.molecule_mass > 0.0))
    throw ConfigError("config: molecule_mass must be positive");
  if (!(c.Lx > 0.0) || !(c.Ly > 0.0))
    throw ConfigError("config: domain lengths must be positive");
  if (!(c.init.density > 0.0) || !(c.init.temperature > 0.0))
    throw ConfigError("config: initial density and temperature must be positive");
  for (const WallSetting* w :
       {&c.wall_left, &c.wall_right, &c.wall_bottom, &c.wall_top})
    if (!(w->temperature > 0.0))
      throw ConfigError("config: wall temperatures must be positive");
  if (c.cycle.s1 < 0 || c.cycle.s2 < 0)
    throw ConfigError("config: s1 and s2 must be nonnegative");
  if (c.cycle.s3 < 1) throw ConfigError("config: s3 must be positive");
  if (c.cycle.gamma < 1) throw ConfigError("config: gamma must be positive");
}

void write_report(const ScenarioConfig& c, const SolveReport& r,
                  const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("write_report: cannot open '" + path + "'");
  out << config_echo(c);
  out << "converged " << (r.converged ? "yes" : "no") << "\n";
  out << "iterations " << r.iterations << "\n";
  out << "initial_residual " << fmt(r.r0_norm) << "\n";
  out << "final_residual " << fmt(r.final_norm) << "\n";
  out << "final_ratio " << fmt(r.final_ratio) << "\n";
  out << "cell_evaluations " << r.work << "\n";
  out << "seconds " << fmt(r.seconds) << "\n";
  out.flush();
  if (!out.good()) throw Error("write_report: write failed for '" + path + "'");
}

}  // namespace

double kelvin_to_theta(double kelvin, double molecule_mass) {
  return k_boltzmann * kelvin / molecule_mass;
}

double theta_to_kelvin(double theta, double molecule_mass) {
  return theta * molecule_mass / k_boltzmann;
}

ScenarioConfig scenario_preset(const std::string& name) {
  ScenarioConfig c;
  c.scenario = name;
  if (name == "custom") return c;
  if (name == "single_lid") {
    c.Lx = c.Ly = 9.63e-7;
    c.wall_top.speed = 50.0;
    c.init.density = 0.891;
    c.gas.knudsen = 0.1;
    return c;
  }
  if (name == "four_lid") {
    c.wall_top.speed = 50.0;
    c.wall_bottom.speed = -50.0;
    c.wall_right.speed = 50.0;
    c.wall_left.speed = -50.0;
    c.init.density = 1.1044e-7;
    c.gas.knudsen = 0.777;
    return c;
  }
  if (name == "bottom_heated") {
    c.Lx = c.Ly = 1e-6;
    c.wall_bottom.temperature = 600.0;
    c.wall_left.temperature = 300.0;
    c.wall_right.temperature = 300.0;
    c.wall_top.temperature = 300.0;
    c.init.density = 0.2733;
    c.init.temperature = 300.0;
    c.gas.knudsen = 0.3;
    return c;
  }
  throw ConfigError("config: unknown scenario '" + name + "'");
}

SolverKind solver_kind_from_string(const std::string& name) {
  if (name == "euler") return SolverKind::euler;
  if (name == "fs") return SolverKind::fs;
  if (name == "nmg") return SolverKind::nmg;
  throw ConfigError("config: unknown solver '" + name + "'");
}

std::string to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::euler:
      return "euler";
    case SolverKind::fs:
      return "fs";
    case SolverKind::nmg:
      return "nmg";
  }
  return "unknown";
}

int levels_from_string(const std::string& text) {
  if (text == "auto") return 0;
  try {
    size_t pos = 0;
    const int k = std::stoi(text, &pos);
    if (pos == text.size() && k >= 1) return k;
  } catch (const std::exception&) {
  }
  throw ConfigError("config: levels must be \"auto\" or a positive count, got '" +
                    text + "'");
}

ScenarioConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: document must be a JSON object");
  check_keys(j, "",
             {"scenario", "collision", "prandtl", "moment_order", "nx", "ny",
              "order", "solver", "levels", "cfl", "tol", "max_iterations",
              "threads", "knudsen", "viscosity_index", "molecule_mass", "domain",
              "walls", "init", "s1", "s2", "s3", "gamma", "output_dir"});

  ScenarioConfig c = scenario_preset(get_string(j, "scenario", "custom"));
  if (j.contains("collision"))
    c.collision.kind = collision_from_string(get_string(j, "collision", ""));
  c.collision.prandtl = get_number(j, "prandtl", c.collision.prandtl);
  c.moment_order = get_int(j, "moment_order", c.moment_order);
  c.nx = get_int(j, "nx", c.nx);
  c.ny = get_int(j, "ny", c.ny);
  c.space_order = get_int(j, "order", c.space_order);
  if (j.contains("solver"))
    c.solver = solver_kind_from_string(get_string(j, "solver", ""));
  if (j.contains("levels")) {
    const json& v = j.at("levels");
    if (v.is_string())
      c.levels = levels_from_string(v.get<std::string>());
    else if (v.is_number_integer() && v.get<int>() >= 1)
      c.levels = v.get<int>();
    else
      bad_key("levels", "must be \"auto\" or a positive count");
  }
  c.cfl = get_number(j, "cfl", c.cfl);
  c.tol = get_number(j, "tol", c.tol);
  c.max_iterations = get_int(j, "max_iterations", c.max_iterations);
  c.threads = get_int(j, "threads", c.threads);
  c.gas.knudsen = get_number(j, "knudsen", c.gas.knudsen);
  c.gas.viscosity_index = get_number(j, "viscosity_index", c.gas.viscosity_index);
  c.gas.molecule_mass = get_number(j, "molecule_mass", c.gas.molecule_mass);
  if (j.contains("domain")) {
    const json& d = j.at("domain");
    if (!d.is_object()) bad_key("domain", "must be an object");
    check_keys(d, "domain", {"Lx", "Ly"});
    c.Lx = get_number(d, "Lx", c.Lx);
    c.Ly = get_number(d, "Ly", c.Ly);
  }
  if (j.contains("walls")) {
    const json& w = j.at("walls");
    if (!w.is_object()) bad_key("walls", "must be an object");
    check_keys(w, "walls", {"left", "right", "bottom", "top"});
    if (w.contains("left")) apply_wall(w.at("left"), "walls.left", c.wall_left);
    if (w.contains("right")) apply_wall(w.at("right"), "walls.right", c.wall_right);
    if (w.contains("bottom"))
      apply_wall(w.at("bottom"), "walls.bottom", c.wall_bottom);
    if (w.contains("top")) apply_wall(w.at("top"), "walls.top", c.wall_top);
  }
  if (j.contains("init")) {
    const json& v = j.at("init");
    if (!v.is_object()) bad_key("init", "must be an object");
    check_keys(v, "init", {"density", "velocity", "temperature"});
    c.init.density = get_number(v, "density", c.init.density);
    c.init.temperature = get_number(v, "temperature", c.init.temperature);
    if (v.contains("velocity")) {
      const json& u = v.at("velocity");
      if (!u.is_array() || (u.size() != 2 && u.size() != 3))
        bad_key("init.velocity", "must be an array of 2 or 3 numbers");
      c.init.velocity = zero3();
      for (size_t d = 0; d < u.size(); ++d) {
        if (!u[d].is_number())
          bad_key("init.velocity", "must be an array of 2 or 3 numbers");
        c.init.velocity[static_cast<int>(d)] = u[d].get<double>();
      }
    }
  }
  c.cycle.s1 = get_int(j, "s1", c.cycle.s1);
  c.cycle.s2 = get_int(j, "s2", c.cycle.s2);
  c.cycle.s3 = get_int(j, "s3", c.cycle.s3);
  c.cycle.gamma = get_int(j, "gamma", c.cycle.gamma);
  c.output_dir = get_string(j, "output_dir", c.output_dir);
  validate_config(c);
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

UnitScales unit_scales(const ScenarioConfig& config) {
  UnitScales s;
  s.length = config.Lx;
  s.density = config.init.density;
  s.theta = kelvin_to_theta(config.init.temperature, config.gas.molecule_mass);
  s.speed = std::sqrt(s.theta);
  return s;
}

std::string config_echo(const ScenarioConfig& c) {
  std::ostringstream out;
  out << "# scenario " << c.scenario << "\n";
  out << "# collision " << collision_name(c.collision.kind) << "\n";
  out << "# prandtl " << fmt(c.collision.prandtl) << "\n";
  out << "# moment_order " << c.moment_order << "\n";
  out << "# grid " << c.nx << " " << c.ny << "\n";
  out << "# order " << c.space_order << "\n";
  out << "# solver " << to_string(c.solver) << "\n";
  out << "# levels "
      << (c.levels == 0 ? std::string("auto") : std::to_string(c.levels)) << "\n";
  out << "# cycle_s1 " << c.cycle.s1 << "\n";
  out << "# cycle_s2 " << c.cycle.s2 << "\n";
  out << "# cycle_s3 " << c.cycle.s3 << "\n";
  out << "# cycle_gamma " << c.cycle.gamma << "\n";
  out << "# coarsest_floor " << min_coarse_cells << "\n";
  out << "# cfl " << fmt(c.cfl) << "\n";
  out << "# tol " << fmt(c.tol) << "\n";
  out << "# max_iterations " << c.max_iterations << "\n";
  out << "# threads " << c.threads << "\n";
  out << "# knudsen " << fmt(c.gas.knudsen) << "\n";
  out << "# viscosity_index " << fmt(c.gas.viscosity_index) << "\n";
  out << "# molecule_mass " << fmt(c.gas.molecule_mass) << "\n";
  out << "# domain " << fmt(c.Lx) << " " << fmt(c.Ly) << "\n";
  const WallSetting* walls[4] = {&c.wall_left, &c.wall_right, &c.wall_bottom,
                                 &c.wall_top};
  const char* names[4] = {"left", "right", "bottom", "top"};
  for (int k = 0; k < 4; ++k)
    out << "# wall_" << names[k] << " " << fmt(walls[k]->speed) << " "
        << fmt(walls[k]->temperature) << "\n";
  out << "# init_density " << fmt(c.init.density) << "\n";
  out << "# init_velocity " << fmt(c.init.velocity[0]) << " "
      << fmt(c.init.velocity[1]) << "\n";
  out << "# init_temperature " << fmt(c.init.temperature) << "\n";
  out << "# output_dir " << c.output_dir << "\n";
  return out.str();
}

void export_history(const SolveReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("export_history: cannot open '" + path + "'");
  out << "iter\trel_residual\tseconds\n";
  for (const HistoryEntry& h : report.history)
    out << h.iteration << "\t" << fmt(h.rel_residual) << "\t" << fmt(h.seconds)
        << "\n";
  out.flush();
  if (!out.good()) throw Error("export_history: write failed for '" + path + "'");
}

void export_field(const CellField& field, const ScenarioConfig& config,
                  const UnitScales& scales, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error("export_field: cannot open '" + path + "'");
  out << "x\ty\trho\tu1\tu2\tT\tsigma11\tsigma12\tsigma22\tq1\tq2\n";
  const Grid2D& g = field.grid();
  const double pressure = scales.density * scales.theta;
  const double heat = pressure * scales.speed;
  for (int j = 0; j < g.ny; ++j)
    for (int i = 0; i < g.nx; ++i) {
      const MacroState<double> m = extract_macro(field.at(i, j));
      const double cols[11] = {
          g.xc[i] * scales.length,
          g.yc[j] * scales.length,
          m.rho * scales.density,
          m.velocity[0] * scales.speed,
          m.velocity[1] * scales.speed,
          theta_to_kelvin(m.theta * scales.theta, config.gas.molecule_mass),
          m.sigma(0, 0) * pressure,
          m.sigma(0, 1) * pressure,
          m.sigma(1, 1) * pressure,
          m.heat_flux[0] * heat,
          m.heat_flux[1] * heat,
      };
      for (int k = 0; k < 11; ++k) {
        if (k > 0) out << "\t";
        out << fmt(cols[k]);
      }
      out << "\n";
    }
  out.flush();
  if (!out.good()) throw Error("export_field: write failed for '" + path + "'");
}

ScenarioResult run_scenario(const ScenarioConfig& config) {
  validate_config(config);
  const UnitScales scales = unit_scales(config);
  const Grid2D grid = Grid2D::uniform(config.nx, config.ny, 1.0, config.Ly / config.Lx);

  SolveContext ctx;
  auto wall = [&](const WallSetting& w) {
    WallSpec spec;
    spec.speed = w.speed / scales.speed;
    spec.theta =
        kelvin_to_theta(w.temperature, config.gas.molecule_mass) / scales.theta;
    return spec;
  };
  ctx.walls.left = wall(config.wall_left);
  ctx.walls.right = wall(config.wall_right);
  ctx.walls.bottom = wall(config.wall_bottom);
  ctx.walls.top = wall(config.wall_top);
  ctx.model = config.collision;
  ctx.gas = config.gas;
  ctx.scheme = SpatialScheme::for_moment_order(config.moment_order, config.space_order);
  ctx.cfl.cfl = config.cfl;
  ctx.cfl.c_bound = ctx.scheme.c_bound;
  ctx.threads = config.threads;

  const Vec3<double> u0 = config.init.velocity / scales.speed;
  const double theta0 =
      kelvin_to_theta(config.init.temperature, config.gas.molecule_mass) /
      scales.theta;
  CellField field = uniform_field(grid, config.moment_order,
                                  config.init.density / scales.density, u0, theta0);

  namespace fsys = std::filesystem;
  fsys::create_directories(config.output_dir);
  const std::string history_path =
      (fsys::path(config.output_dir) / "history.tsv").string();
  const std::string field_path =
      (fsys::path(config.output_dir) / "field.tsv").string();
  const std::string report_path =
      (fsys::path(config.output_dir) / "report.txt").string();

  SolverOptions options;
  options.kind = config.solver;
  options.tol = config.tol;
  options.max_iterations = config.max_iterations;
  options.levels = config.levels;
  options.cycle = config.cycle;

  try {
    SolveReport report = solve_steady(field, ctx, options);
    export_history(report, history_path);
    export_field(field, config, scales, field_path);
    write_report(config, report, report_path);
    return ScenarioResult{report, std::move(field), scales};
  } catch (const NonConvergence& e) {
    export_history(e.report(), history_path);
    write_report(config, e.report(), report_path);
    throw;
  }
}

}  // namespace momg
