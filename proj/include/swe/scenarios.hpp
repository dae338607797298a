#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "swe/integrator.hpp"
#include "swe/metrics.hpp"

namespace swe {

// How a scenario's results are judged: against its own initial data (balanced
// steady states), against an analytic formula at the final time, against a
// self-computed fine-grid run, or not at all.
enum class ReferenceKind { none, initial, formula, fine_grid };

struct Scenario1D {
  std::string name;
  std::string description;
  double x_min = 0.0, x_max = 1.0;
  double t_final = 1.0;
  int default_n = 100;
  int reference_n = 0;  // fine grid for ReferenceKind::fine_grid
  double cfl = 0.4;
  double manning_m = 0.0;
  bool regularize_bathy = false;  // discontinuous bottoms use the piecewise linear form
  std::function<double(double)> w0, hu0;
  std::function<double(double)> bathy;     // pointwise; one-sided limits resolved by regularization
  std::function<double(double)> bathy_dx;  // analytic slope (unused when regularized)
  BoundarySpec1D bc;
  ReferenceKind reference = ReferenceKind::none;
  std::function<double(double, double)> w_ref, hu_ref;  // (x, t), formula references
};

struct Scenario2D {
  std::string name;
  std::string description;
  double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
  double t_final = 1.0;
  int default_nx = 100, default_ny = 100;
  int reference_nx = 0, reference_ny = 0;
  double cfl = 0.45;
  std::function<double(double, double)> w0, hu0, hv0;
  std::function<double(double, double)> bathy, bathy_dx, bathy_dy;
  BoundarySpec2D bc;
  ReferenceKind reference = ReferenceKind::none;
  std::vector<double> snapshot_times;
};

const std::vector<Scenario1D>& scenario_catalog_1d();
const std::vector<Scenario2D>& scenario_catalog_2d();
const Scenario1D* find_scenario_1d(const std::string& name);
const Scenario2D* find_scenario_2d(const std::string& name);
std::vector<std::string> scenario_names();

struct RunSwitches {
  std::optional<int> nx, ny;
  std::optional<double> cfl;
  std::optional<double> t_final;
  std::optional<double> manning_m;
  LimiterConfig limiter{};
  bool well_balanced = true;
  bool audit_mass = false;
  std::vector<double> snapshot_times;  // added to the scenario's own list
  bool keep_snapshots = false;
  std::ostream* log_stream = nullptr;
};

struct ScenarioRun1D {
  Grid1D grid;
  Bathymetry1D bathy;
  ModelParams params;
  Field1D field;
  Field1D initial;
  AdvanceResult adv;
  std::vector<std::pair<double, Field1D>> snapshots;
  std::optional<ErrorReport> report;  // vs initial data or formula reference
};

struct ScenarioRun2D {
  Grid2D grid;
  Bathymetry2D bathy;
  ModelParams params;
  Field2D field;
  Field2D initial;
  AdvanceResult adv;
  std::vector<std::pair<double, Field2D>> snapshots;
  std::optional<ErrorReport> report;
};

ScenarioRun1D run_scenario(const Scenario1D& scn, const RunSwitches& sw = {});
ScenarioRun2D run_scenario(const Scenario2D& scn, const RunSwitches& sw = {});

// Exact cell averages of a formula reference at time t on the primal grid
// (3-point Gauss, matching the initialization rule).
Field1D reference_field(const Scenario1D& scn, const Grid1D& g, double t);

// Assembler matching a scenario run's configuration; used where the stages
// must be driven manually.
RhsAssembler1D make_assembler(const Scenario1D& scn, const Grid1D& g, const RunSwitches& sw = {});
RhsAssembler2D make_assembler(const Scenario2D& scn, const Grid2D& g, const RunSwitches& sw = {});

}  // namespace swe
