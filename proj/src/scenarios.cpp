#include "swe/scenarios.hpp"

#include <cmath>

#include "swe/errors.hpp"
#include "swe/quadrature.hpp"

namespace swe {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::function<double(double)> constant(double v) {
  return [v](double) { return v; };
}

BoundarySpec1D inflow_outflow(double hu_left, double w_right) {
  BoundarySpec1D bc;
  bc.left.kind = BCKind::dirichlet;
  bc.left.comp[0] = Prescribed::extrapolate();
  bc.left.comp[1] = Prescribed::fixed(hu_left);
  bc.right.kind = BCKind::dirichlet;
  bc.right.comp[0] = Prescribed::fixed(w_right);
  bc.right.comp[1] = Prescribed::extrapolate();
  return bc;
}

Scenario1D perturbation_scenario(const std::string& name, double eps) {
  Scenario1D s;
  s.name = name;
  s.description = "small disturbance of a flat lake over a submerged hump (eps = " + std::to_string(eps) + ")";
  s.x_min = 0.0;
  s.x_max = 2.0;
  s.t_final = 0.2;
  s.default_n = 200;
  s.reference_n = 3000;
  s.w0 = [eps](double x) { return (x >= 1.1 && x <= 1.2) ? 1.0 + eps : 1.0; };
  s.hu0 = constant(0.0);
  s.bathy = [](double x) {
    return (x >= 1.4 && x <= 1.6) ? 0.25 * (std::cos(10.0 * kPi * (x - 1.5)) + 1.0) : 0.0;
  };
  s.bathy_dx = [](double x) {
    return (x >= 1.4 && x <= 1.6) ? -2.5 * kPi * std::sin(10.0 * kPi * (x - 1.5)) : 0.0;
  };
  s.bc = BoundarySpec1D::absorbing();
  s.reference = ReferenceKind::fine_grid;
  return s;
}

Scenario1D dam_break_scenario(const std::string& name, double manning) {
  Scenario1D s;
  s.name = name;
  s.description = manning > 0.0 ? "dam break over a bottom step with Manning friction"
                                : "dam break over a bottom step";
  s.x_min = 0.0;
  s.x_max = 1500.0;
  s.t_final = 55.0;
  s.default_n = 500;
  s.reference_n = 5000;
  s.manning_m = manning;
  s.regularize_bathy = true;
  s.w0 = [](double x) { return x <= 750.0 ? 20.0 : 15.0; };
  s.hu0 = constant(0.0);
  s.bathy = [](double x) { return (x >= 562.5 && x <= 937.5) ? 8.0 : 0.0; };
  s.bathy_dx = constant(0.0);  // regularized form supplies the slope
  s.bc = BoundarySpec1D::absorbing();
  s.reference = ReferenceKind::fine_grid;
  return s;
}

Scenario1D hump_scenario(const std::string& name, double hu_in, double w_out, int n, int ref_n,
                         const std::string& regime) {
  Scenario1D s;
  s.name = name;
  s.description = "steady flow over a parabolic hump, " + regime;
  s.x_min = 0.0;
  s.x_max = 25.0;
  s.t_final = 200.0;
  s.default_n = n;
  s.reference_n = ref_n;
  s.w0 = constant(0.5);
  s.hu0 = constant(0.0);
  s.bathy = [](double x) { return (x >= 8.0 && x <= 12.0) ? 0.2 - 0.05 * (x - 10.0) * (x - 10.0) : 0.0; };
  s.bathy_dx = [](double x) { return (x >= 8.0 && x <= 12.0) ? -0.1 * (x - 10.0) : 0.0; };
  s.bc = inflow_outflow(hu_in, w_out);
  s.reference = ReferenceKind::fine_grid;
  return s;
}

std::vector<Scenario1D> build_catalog_1d() {
  std::vector<Scenario1D> cat;

  {
    Scenario1D s;
    s.name = "wb-1d-smooth";
    s.description = "flat lake over a Gaussian bump, preserved to round-off";
    s.x_min = 0.0;
    s.x_max = 10.0;
    s.t_final = 10.0;
    s.default_n = 200;
    s.w0 = constant(10.0);
    s.hu0 = constant(0.0);
    s.bathy = [](double x) { return 5.0 * std::exp(-0.4 * (x - 5.0) * (x - 5.0)); };
    s.bathy_dx = [](double x) { return -4.0 * (x - 5.0) * std::exp(-0.4 * (x - 5.0) * (x - 5.0)); };
    s.bc = BoundarySpec1D::absorbing();
    s.reference = ReferenceKind::initial;
    cat.push_back(std::move(s));
  }

  {
    Scenario1D s;
    s.name = "wb-1d-step";
    s.description = "flat lake over a bottom step, preserved to round-off";
    s.x_min = 0.0;
    s.x_max = 10.0;
    s.t_final = 10.0;
    s.default_n = 200;
    s.regularize_bathy = true;
    s.w0 = constant(10.0);
    s.hu0 = constant(0.0);
    s.bathy = [](double x) { return (x >= 4.0 && x <= 8.0) ? 4.0 : 0.0; };
    s.bathy_dx = constant(0.0);
    s.bc = BoundarySpec1D::absorbing();
    s.reference = ReferenceKind::initial;
    cat.push_back(std::move(s));
  }

  {
    Scenario1D s;
    s.name = "accuracy-1d";
    s.description = "smooth periodic flow for grid-convergence studies";
    s.x_min = 0.0;
    s.x_max = 1.0;
    s.t_final = 0.1;
    s.default_n = 400;
    s.w0 = [](double x) { return 5.5 - 0.5 * std::cos(2.0 * kPi * x) + std::exp(std::cos(2.0 * kPi * x)); };
    s.hu0 = [](double x) { return std::sin(std::cos(2.0 * kPi * x)); };
    s.bathy = [](double x) { return std::sin(kPi * x) * std::sin(kPi * x); };
    s.bathy_dx = [](double x) { return 2.0 * kPi * std::sin(kPi * x) * std::cos(kPi * x); };
    s.bc = BoundarySpec1D::periodic();
    cat.push_back(std::move(s));
  }

  {
    Scenario1D s;
    const double L = 14000.0;
    s.name = "tidal";
    s.description = "tidal wave flow up a long sloped channel";
    s.x_min = 0.0;
    s.x_max = L;
    s.t_final = 7552.13;
    s.default_n = 200;
    s.reference_n = 3000;
    s.w0 = constant(60.5);
    s.hu0 = constant(0.0);
    s.bathy = [L](double x) {
      return 10.0 + 40.0 * x / L + 10.0 * std::sin(4.0 * kPi * x / L - 0.5 * kPi);
    };
    s.bathy_dx = [L](double x) {
      return 40.0 / L + 10.0 * (4.0 * kPi / L) * std::cos(4.0 * kPi * x / L - 0.5 * kPi);
    };
    s.bc.left.kind = BCKind::dirichlet;
    s.bc.left.comp[0] =
        Prescribed::of_time([](double t) { return 64.5 - 4.0 * std::sin(4.0 * kPi * t / 86400.0 + 0.5 * kPi); });
    s.bc.left.comp[1] = Prescribed::extrapolate();
    s.bc.right.kind = BCKind::dirichlet;
    s.bc.right.comp[0] = Prescribed::extrapolate();
    s.bc.right.comp[1] = Prescribed::fixed(0.0);
    s.reference = ReferenceKind::formula;
    s.w_ref = [](double, double t) { return 64.5 - 4.0 * std::sin(4.0 * kPi * t / 86400.0 + 0.5 * kPi); };
    s.hu_ref = [L](double x, double t) {
      return kPi * (x - L) / 5400.0 * std::cos(4.0 * kPi * t / 86400.0 + 0.5 * kPi);
    };
    cat.push_back(std::move(s));
  }

  cat.push_back(perturbation_scenario("perturbation", 0.001));
  cat.push_back(perturbation_scenario("perturbation-large", 0.2));
  cat.push_back(dam_break_scenario("dam-break", 0.0));
  cat.push_back(dam_break_scenario("dam-break-friction", 0.1));
  cat.push_back(hump_scenario("hump-subcritical", 4.42, 2.0, 100, 1000, "subcritical"));
  cat.push_back(hump_scenario("hump-transcritical", 1.53, 0.41, 200, 2000, "transcritical, no shock"));
  cat.push_back(hump_scenario("hump-shock", 0.18, 0.33, 100, 1000, "transcritical with a stationary shock"));

  return cat;
}

std::vector<Scenario2D> build_catalog_2d() {
  std::vector<Scenario2D> cat;

  {
    Scenario2D s;
    s.name = "wb-2d";
    s.description = "flat lake over a 2-D Gaussian bump, preserved to round-off";
    s.x_min = 0.0;
    s.x_max = 1.0;
    s.y_min = 0.0;
    s.y_max = 1.0;
    s.t_final = 0.1;
    s.default_nx = 100;
    s.default_ny = 100;
    s.w0 = [](double, double) { return 1.0; };
    s.hu0 = [](double, double) { return 0.0; };
    s.hv0 = [](double, double) { return 0.0; };
    s.bathy = [](double x, double y) {
      return 0.8 * std::exp(-50.0 * ((x - 0.5) * (x - 0.5) + (y - 0.5) * (y - 0.5)));
    };
    s.bathy_dx = [](double x, double y) {
      return -80.0 * (x - 0.5) * std::exp(-50.0 * ((x - 0.5) * (x - 0.5) + (y - 0.5) * (y - 0.5)));
    };
    s.bathy_dy = [](double x, double y) {
      return -80.0 * (y - 0.5) * std::exp(-50.0 * ((x - 0.5) * (x - 0.5) + (y - 0.5) * (y - 0.5)));
    };
    s.bc = BoundarySpec2D::absorbing();
    s.reference = ReferenceKind::initial;
    cat.push_back(std::move(s));
  }

  {
    Scenario2D s;
    s.name = "perturbation-2d";
    s.description = "planar disturbance propagating over an elongated hump";
    s.x_min = 0.0;
    s.x_max = 2.0;
    s.y_min = 0.0;
    s.y_max = 1.0;
    s.t_final = 0.6;
    s.default_nx = 200;
    s.default_ny = 100;
    s.reference_nx = 600;
    s.reference_ny = 300;
    s.w0 = [](double x, double) { return (x >= 0.05 && x <= 0.15) ? 1.01 : 1.0; };
    s.hu0 = [](double, double) { return 0.0; };
    s.hv0 = [](double, double) { return 0.0; };
    s.bathy = [](double x, double y) {
      return 0.8 * std::exp(-5.0 * (x - 0.9) * (x - 0.9) - 50.0 * (y - 0.5) * (y - 0.5));
    };
    s.bathy_dx = [](double x, double y) {
      return -8.0 * (x - 0.9) * std::exp(-5.0 * (x - 0.9) * (x - 0.9) - 50.0 * (y - 0.5) * (y - 0.5));
    };
    s.bathy_dy = [](double x, double y) {
      return -80.0 * (y - 0.5) * std::exp(-5.0 * (x - 0.9) * (x - 0.9) - 50.0 * (y - 0.5) * (y - 0.5));
    };
    s.bc = BoundarySpec2D::absorbing();
    s.reference = ReferenceKind::fine_grid;
    s.snapshot_times = {0.12, 0.24, 0.36, 0.48, 0.6};
    cat.push_back(std::move(s));
  }

  return cat;
}

}  // namespace

const std::vector<Scenario1D>& scenario_catalog_1d() {
  static const std::vector<Scenario1D> cat = build_catalog_1d();
  return cat;
}

const std::vector<Scenario2D>& scenario_catalog_2d() {
  static const std::vector<Scenario2D> cat = build_catalog_2d();
  return cat;
}

const Scenario1D* find_scenario_1d(const std::string& name) {
  for (const auto& s : scenario_catalog_1d())
    if (s.name == name) return &s;
  return nullptr;
}

const Scenario2D* find_scenario_2d(const std::string& name) {
  for (const auto& s : scenario_catalog_2d())
    if (s.name == name) return &s;
  return nullptr;
}

std::vector<std::string> scenario_names() {
  std::vector<std::string> names;
  for (const auto& s : scenario_catalog_1d()) names.push_back(s.name);
  for (const auto& s : scenario_catalog_2d()) names.push_back(s.name);
  return names;
}

namespace {

Bathymetry1D make_bathy(const Scenario1D& scn, const Grid1D& g) {
  if (scn.regularize_bathy) return regularize_bathymetry(scn.bathy, g);
  return Bathymetry1D::analytic(scn.bathy, scn.bathy_dx);
}

Bathymetry2D make_bathy(const Scenario2D& scn, const Grid2D&) {
  return Bathymetry2D::analytic(scn.bathy, scn.bathy_dx, scn.bathy_dy);
}

ModelParams make_params(double manning) {
  ModelParams p;
  p.manning_m = manning;
  return p;
}

void check_wet(const Field1D& f, const Grid1D& g, const Bathymetry1D& b, const ModelParams& p) {
  for (int k = g.begin(); k < g.end(); ++k)
    depth_checked(f.primal[k][0], b.value(g.primal_center(k)), p, g.primal_center(k));
}

void check_wet(const Field2D& f, const Grid2D& g, const Bathymetry2D& b, const ModelParams& p) {
  for (int j = g.begin_y(); j < g.end_y(); ++j)
    for (int i = g.begin_x(); i < g.end_x(); ++i)
      depth_checked(f.primal[g.index(i, j)][0], b.value(g.primal_center_x(i), g.primal_center_y(j)), p,
                    g.primal_center_x(i), g.primal_center_y(j));
}

}  // namespace

RhsAssembler1D make_assembler(const Scenario1D& scn, const Grid1D& g, const RunSwitches& sw) {
  RhsConfig cfg;
  cfg.limiter = sw.limiter;
  cfg.well_balanced = sw.well_balanced;
  return RhsAssembler1D(g, make_bathy(scn, g), make_params(sw.manning_m.value_or(scn.manning_m)), scn.bc, cfg);
}

RhsAssembler2D make_assembler(const Scenario2D& scn, const Grid2D& g, const RunSwitches& sw) {
  RhsConfig cfg;
  cfg.limiter = sw.limiter;
  cfg.well_balanced = sw.well_balanced;
  return RhsAssembler2D(g, make_bathy(scn, g), make_params(sw.manning_m.value_or(0.0)), scn.bc, cfg);
}

Field1D reference_field(const Scenario1D& scn, const Grid1D& g, double t) {
  if (scn.reference == ReferenceKind::formula && scn.w_ref) {
    return init_field(
        g, [&](double x) { return scn.w_ref(x, t); }, [&](double x) { return scn.hu_ref(x, t); });
  }
  return init_field(g, scn.w0, scn.hu0);
}

ScenarioRun1D run_scenario(const Scenario1D& scn, const RunSwitches& sw) {
  const int n = sw.nx.value_or(scn.default_n);
  const double t_final = sw.t_final.value_or(scn.t_final);
  ScenarioRun1D run;
  run.grid = build_grid_1d(scn.x_min, scn.x_max, n);
  run.params = make_params(sw.manning_m.value_or(scn.manning_m));
  run.bathy = make_bathy(scn, run.grid);
  run.field = init_field(run.grid, scn.w0, scn.hu0);
  check_wet(run.field, run.grid, run.bathy, run.params);
  run.initial = run.field;

  RhsConfig cfg;
  cfg.limiter = sw.limiter;
  cfg.well_balanced = sw.well_balanced;
  RhsAssembler1D assembler(run.grid, run.bathy, run.params, scn.bc, cfg);

  AdvanceOptions opt;
  opt.cfl = sw.cfl.value_or(scn.cfl);
  opt.audit_mass = sw.audit_mass;
  opt.log_stream = sw.log_stream;
  opt.snapshot_times = sw.snapshot_times;
  if (sw.keep_snapshots)
    opt.on_snapshot_1d = [&run](double t, const Field1D& f) { run.snapshots.emplace_back(t, f); };
  run.adv = advance_to(run.field, assembler, 0.0, t_final, opt);

  if (scn.reference == ReferenceKind::initial) {
    run.report = error_norms(run.field, run.initial, run.grid);
  } else if (scn.reference == ReferenceKind::formula) {
    run.report = error_norms(run.field, reference_field(scn, run.grid, t_final), run.grid);
  }
  return run;
}

ScenarioRun2D run_scenario(const Scenario2D& scn, const RunSwitches& sw) {
  const int nx = sw.nx.value_or(scn.default_nx);
  const int ny = sw.ny.value_or(scn.default_ny);
  const double t_final = sw.t_final.value_or(scn.t_final);
  ScenarioRun2D run;
  run.grid = build_grid_2d(scn.x_min, scn.x_max, scn.y_min, scn.y_max, nx, ny);
  run.params = make_params(0.0);
  run.bathy = make_bathy(scn, run.grid);
  run.field = init_field(run.grid, scn.w0, scn.hu0, scn.hv0);
  check_wet(run.field, run.grid, run.bathy, run.params);
  run.initial = run.field;

  RhsConfig cfg;
  cfg.limiter = sw.limiter;
  cfg.well_balanced = sw.well_balanced;
  RhsAssembler2D assembler(run.grid, run.bathy, run.params, scn.bc, cfg);

  AdvanceOptions opt;
  opt.cfl = sw.cfl.value_or(scn.cfl);
  opt.audit_mass = sw.audit_mass;
  opt.log_stream = sw.log_stream;
  opt.snapshot_times = sw.snapshot_times.empty() && sw.keep_snapshots ? scn.snapshot_times : sw.snapshot_times;
  if (sw.keep_snapshots)
    opt.on_snapshot_2d = [&run](double t, const Field2D& f) { run.snapshots.emplace_back(t, f); };
  run.adv = advance_to(run.field, assembler, 0.0, t_final, opt);

  if (scn.reference == ReferenceKind::initial) run.report = error_norms(run.field, run.initial, run.grid);
  return run;
}

}  // namespace swe
