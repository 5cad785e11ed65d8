#pragma once

#include <string>

#include "momg/multigrid.hpp"

namespace momg {

/// Boltzmann constant, J/K.
inline constexpr double k_boltzmann = 1.380649e-23;

/// Temperature in specific-energy units (velocity squared) for a molecule
/// of the given mass, and back.
double kelvin_to_theta(double kelvin, double molecule_mass);
double theta_to_kelvin(double theta, double molecule_mass);

/// One cavity wall in laboratory units: tangential speed in m/s (along x for
/// bottom/top walls, along y for left/right walls) and temperature in Kelvin.
struct WallSetting {
  double speed = 0.0;
  double temperature = 273.0;
};

/// Uniform Maxwellian initial state in laboratory units. Its temperature
/// also serves as the reference temperature of the solver units.
struct InitialState {
  double density = 1.0;
  Vec3<double> velocity = zero3();
  double temperature = 273.0;
};

/// Full description of a cavity run. Physical constants shared by all
/// benchmark presets live here or in the structs they configure, each as a
/// single default.
struct ScenarioConfig {
  std::string scenario = "custom";
  CollisionModel collision{CollisionKind::shakhov, 2.0 / 3.0};
  int moment_order = 3;
  int nx = 16;
  int ny = 16;
  int space_order = 1;
  SolverKind solver = SolverKind::nmg;
  int levels = 0;  // 0 = deepest hierarchy
  double cfl = CflPolicy{}.cfl;
  double tol = SolverOptions{}.tol;
  int max_iterations = 0;  // 0 = solver default cap
  int threads = 1;
  GasParams gas;
  double Lx = 1.0;  // metres
  double Ly = 1.0;
  WallSetting wall_left, wall_right, wall_bottom, wall_top;
  InitialState init;
  CyclePolicy cycle;
  std::string output_dir = "out";
};

/// Named benchmark presets: single_lid, four_lid, bottom_heated, custom.
ScenarioConfig scenario_preset(const std::string& name);

/// Parses a JSON configuration document. The `scenario` key selects the
/// preset whose values the remaining keys override; unknown keys are
/// rejected by name.
ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config(const std::string& path);

SolverKind solver_kind_from_string(const std::string& name);
std::string to_string(SolverKind kind);
/// "auto" -> 0, otherwise a positive level count.
int levels_from_string(const std::string& text);

/// Conversion factors between laboratory and solver units. Lengths scale by
/// Lx, densities by the initial density, temperatures (specific-energy form)
/// by the initial temperature; speeds scale by sqrt(theta).
struct UnitScales {
  double length = 1.0;
  double density = 1.0;
  double theta = 1.0;
  double speed = 1.0;
};
UnitScales unit_scales(const ScenarioConfig& config);

/// Configuration echo: one "# key value" line per setting, numbers at full
/// precision. Prepended to report files and printed by the CLI.
std::string config_echo(const ScenarioConfig& config);

/// History table: one header row, then (iter, rel_residual, seconds) rows.
void export_history(const SolveReport& report, const std::string& path);

/// Field table in laboratory units: one header row, then one row per cell
/// (x, y, rho, u1, u2, T, sigma11, sigma12, sigma22, q1, q2), row-major with
/// the y index outermost.
void export_field(const CellField& field, const ScenarioConfig& config,
                  const UnitScales& scales, const std::string& path);

struct ScenarioResult {
  SolveReport report;
  CellField field;  // solver units
  UnitScales scales;
};

/// Runs the configured scenario: builds the uniform Maxwellian start, solves
/// to steady state, and writes history.tsv, field.tsv, and report.txt under
/// output_dir. When the solver fails, the partial history and report are
/// written before the NonConvergence propagates.
ScenarioResult run_scenario(const ScenarioConfig& config);

}  // namespace momg
