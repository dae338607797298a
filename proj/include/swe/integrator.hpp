#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <vector>

#include "swe/rhs.hpp"

namespace swe {

struct TimeControls {
  double cfl = 0.4;
  double dt = 0.0;
  double dtau = 0.0;   // relaxation time scale, bounded by a*dtau/dx <= 1/2
  double theta = 0.0;  // dt/dtau, in (0, 1]
  double a = 0.0;      // max wave speed used for this step (max over both directions in 2-D)
  double t = 0.0;
  double t_final = 0.0;
};

// CFL-driven step sizes: dtau = dx/(2a) in 1-D and 1/(2(ax/dx + ay/dy)) in
// 2-D; dt = cfl*dx/a (cfl*min(dx/ax, dy/ay) in 2-D) clipped to dtau and to
// t_final - t, so theta = dt/dtau never exceeds 1. A fully static field
// (a = 0) falls back to dt = dtau = dx.
TimeControls choose_step(const Field1D& f, const Grid1D& g, const Bathymetry1D& bathy,
                         const ModelParams& p, double cfl, double t, double t_final);
TimeControls choose_step(const Field2D& f, const Grid2D& g, const Bathymetry2D& bathy,
                         const ModelParams& p, double cfl, double t, double t_final);

// Three-stage strong-stability-preserving Runge-Kutta step:
//   u1 = u + dt L(u), u2 = 3/4 u + 1/4 (u1 + dt L(u1)),
//   u  = 1/3 u + 2/3 (u2 + dt L(u2)).
// The evaluator refreshes boundary ghosts internally at the stage times
// t, t + dt, t + dt/2.
void ssp_rk3_step(Field1D& u, const std::function<Rhs1D(const Field1D&, double)>& rhs, double dt, double t);
void ssp_rk3_step(Field2D& u, const std::function<Rhs2D(const Field2D&, double)>& rhs, double dt, double t);

struct StepRecord {
  int step = 0;
  double t = 0.0;       // time after the step
  double dt = 0.0;
  double a = 0.0;
  double total_w_mass = 0.0;  // primal interior, w * cell measure
  double max_abs_hu = 0.0;    // largest discharge magnitude over the primal interior
  double max_rate = 0.0;      // L-inf of the per-step change divided by dt
};

struct AdvanceOptions {
  double cfl = 0.4;
  std::vector<double> snapshot_times;  // hit exactly; callback invoked at each
  std::function<void(double, const Field1D&)> on_snapshot_1d;
  std::function<void(double, const Field2D&)> on_snapshot_2d;
  std::ostream* log_stream = nullptr;  // one CSV line per step when set
  bool audit_mass = false;             // accumulate the w-mass balance across stages
  int max_steps = 50'000'000;
};

struct AdvanceResult {
  std::vector<StepRecord> log;
  double mass_initial = 0.0;
  double mass_final = 0.0;
  double mass_expected_delta = 0.0;  // RK-weighted (relaxation - boundary outflow), audit mode only
  double audit_mismatch = 0.0;       // worst |interior rate sum - (relax - outflow)| seen
};

// Advance to t_final with per-step CFL control, the global mean surface
// frozen across the stages of each step, and NaN/dry-state aborts carrying
// the step index.
AdvanceResult advance_to(Field1D& f, const RhsAssembler1D& rhs, double t0, double t_final,
                         const AdvanceOptions& opt = {});
AdvanceResult advance_to(Field2D& f, const RhsAssembler2D& rhs, double t0, double t_final,
                         const AdvanceOptions& opt = {});

}  // namespace swe
