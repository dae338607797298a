#include "swe/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "swe/errors.hpp"

namespace swe {

namespace {

TimeControls make_controls(double cfl, double a, double dtau, double dt_cfl, double fallback_dt, double t,
                           double t_final) {
  TimeControls tc;
  tc.cfl = cfl;
  tc.a = a;
  tc.t = t;
  tc.t_final = t_final;
  if (a <= 0.0) {
    tc.dtau = tc.dt = fallback_dt;
  } else {
    tc.dtau = dtau;
    tc.dt = std::min(dt_cfl, dtau);
  }
  if (t_final > t) tc.dt = std::min(tc.dt, t_final - t);
  tc.theta = tc.dt / tc.dtau;
  return tc;
}

}  // namespace

TimeControls choose_step(const Field1D& f, const Grid1D& g, const Bathymetry1D& bathy,
                         const ModelParams& p, double cfl, double t, double t_final) {
  const double a = max_wave_speed(f, g, bathy, p);
  return make_controls(cfl, a, 0.5 * g.dx / a, cfl * g.dx / a, g.dx, t, t_final);
}

TimeControls choose_step(const Field2D& f, const Grid2D& g, const Bathymetry2D& bathy,
                         const ModelParams& p, double cfl, double t, double t_final) {
  const auto [ax, ay] = max_wave_speed(f, g, bathy, p);
  const double a = std::max(ax, ay);
  if (a <= 0.0) return make_controls(cfl, 0.0, 0.0, 0.0, std::min(g.dx, g.dy), t, t_final);
  const double dtau = 0.5 / (ax / g.dx + ay / g.dy);
  const double dt_cfl = cfl * std::min(ax > 0.0 ? g.dx / ax : dtau, ay > 0.0 ? g.dy / ay : dtau);
  return make_controls(cfl, a, dtau, dt_cfl, std::min(g.dx, g.dy), t, t_final);
}

namespace {

template <class Field, class Rhs, class EvalFn>
void rk3(Field& u, const EvalFn& rhs, double dt, double t) {
  const Rhs k0 = rhs(u, t);
  Field u1 = u;
  for (std::size_t i = 0; i < u.primal.size(); ++i)
    for (std::size_t c = 0; c < u.primal[i].size(); ++c) {
      u1.primal[i][c] = u.primal[i][c] + dt * k0.primal[i][c];
      u1.dual[i][c] = u.dual[i][c] + dt * k0.dual[i][c];
    }
  const Rhs k1 = rhs(u1, t + dt);
  Field u2 = u;
  for (std::size_t i = 0; i < u.primal.size(); ++i)
    for (std::size_t c = 0; c < u.primal[i].size(); ++c) {
      u2.primal[i][c] = 0.75 * u.primal[i][c] + 0.25 * (u1.primal[i][c] + dt * k1.primal[i][c]);
      u2.dual[i][c] = 0.75 * u.dual[i][c] + 0.25 * (u1.dual[i][c] + dt * k1.dual[i][c]);
    }
  const Rhs k2 = rhs(u2, t + 0.5 * dt);
  for (std::size_t i = 0; i < u.primal.size(); ++i)
    for (std::size_t c = 0; c < u.primal[i].size(); ++c) {
      u.primal[i][c] = u.primal[i][c] / 3.0 + (2.0 / 3.0) * (u2.primal[i][c] + dt * k2.primal[i][c]);
      u.dual[i][c] = u.dual[i][c] / 3.0 + (2.0 / 3.0) * (u2.dual[i][c] + dt * k2.dual[i][c]);
    }
}

}  // namespace

void ssp_rk3_step(Field1D& u, const std::function<Rhs1D(const Field1D&, double)>& rhs, double dt, double t) {
  rk3<Field1D, Rhs1D>(u, rhs, dt, t);
}

void ssp_rk3_step(Field2D& u, const std::function<Rhs2D(const Field2D&, double)>& rhs, double dt, double t) {
  rk3<Field2D, Rhs2D>(u, rhs, dt, t);
}

namespace {

// SSP-RK3 written as a plain Runge-Kutta method has stage weights
// (1/6, 1/6, 2/3), so any linear functional of the field advances by dt times
// the weighted stage rates. The mass audit relies on this to track the exact
// discrete balance of the w equation.
constexpr double kStageWeight[3] = {1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0};

struct Diag {
  double mass = 0.0;
  double max_q = 0.0;
};

Diag diagnostics(const Field1D& f, const Grid1D& g) {
  Diag d;
  for (int k = g.begin(); k < g.end(); ++k) {
    d.mass += f.primal[k][0];
    d.max_q = std::max(d.max_q, std::fabs(f.primal[k][1]));
  }
  d.mass *= g.dx;
  return d;
}

Diag diagnostics(const Field2D& f, const Grid2D& g) {
  Diag d;
  for (int j = g.begin_y(); j < g.end_y(); ++j)
    for (int i = g.begin_x(); i < g.end_x(); ++i) {
      const auto& a = f.primal[g.index(i, j)];
      d.mass += a[0];
      d.max_q = std::max({d.max_q, std::fabs(a[1]), std::fabs(a[2])});
    }
  d.mass *= g.dx * g.dy;
  return d;
}

template <class Field>
bool finite_state(const Field& f) {
  for (std::size_t k = 0; k < f.primal.size(); ++k)
    if (!all_finite(f.primal[k]) || !all_finite(f.dual[k])) return false;
  return true;
}

template <class Field, class Rhs, class Assembler, class Grid, class SnapFn>
AdvanceResult advance_impl(Field& f, const Assembler& rhs, const Grid& grid, double t0, double t_final,
                           const AdvanceOptions& opt, const SnapFn& snapshot) {
  AdvanceResult res;
  if (opt.log_stream) *opt.log_stream << "step,t,dt,a,total_w_mass,max_abs_hu,max_rate\n";
  res.mass_initial = diagnostics(f, grid).mass;

  std::vector<double> stops = opt.snapshot_times;
  std::sort(stops.begin(), stops.end());
  std::size_t next_stop = 0;
  const double eps = 1e-12 * std::max(1.0, std::fabs(t_final));
  while (next_stop < stops.size() && stops[next_stop] <= t0 + eps) ++next_stop;

  double t = t0;
  Field prev = f;
  int step = 0;
  while (t < t_final - eps) {
    if (step >= opt.max_steps) throw SolverError("advance_to: step limit exceeded");
    const double stop = next_stop < stops.size() ? std::min(stops[next_stop], t_final) : t_final;
    const double w_mean = global_mean_w(f, grid);  // frozen across the stages of this step
    const TimeControls tc =
        choose_step(f, grid, rhs.bathymetry(), rhs.params(), opt.cfl, t, stop);
    if (!(tc.dt > 0.0)) throw SolverError("advance_to: nonpositive dt at step " + std::to_string(step));

    prev = f;
    try {
      int stage = 0;
      const auto stage_rhs = [&](const Field& u, double ts) {
        MassAudit audit;
        Rhs r = rhs(u, ts, tc.dtau, w_mean, opt.audit_mass ? &audit : nullptr);
        if (opt.audit_mass) {
          const double rate = audit.relax_exchange - audit.boundary_outflow;
          res.mass_expected_delta += kStageWeight[stage] * tc.dt * rate;
          res.audit_mismatch = std::max(res.audit_mismatch, std::fabs(audit.interior_sum - rate));
        }
        ++stage;
        return r;
      };
      rk3<Field, Rhs>(f, stage_rhs, tc.dt, t);
    } catch (const SolverError& e) {
      throw SolverError(std::string(e.what()) + " (step " + std::to_string(step) +
                        ", t=" + std::to_string(t) + ")");
    }

    t = (stop - (t + tc.dt) <= eps) ? stop : t + tc.dt;
    ++step;

    if (!finite_state(f))
      throw SolverError("advance_to: non-finite state at step " + std::to_string(step) +
                        ", t=" + std::to_string(t));

    StepRecord rec;
    rec.step = step;
    rec.t = t;
    rec.dt = tc.dt;
    rec.a = tc.a;
    const Diag d = diagnostics(f, grid);
    rec.total_w_mass = d.mass;
    rec.max_abs_hu = d.max_q;
    double dmax = 0.0;
    for (std::size_t k = 0; k < f.primal.size(); ++k)
      for (std::size_t c = 0; c < f.primal[k].size(); ++c) {
        dmax = std::max(dmax, std::fabs(f.primal[k][c] - prev.primal[k][c]));
        dmax = std::max(dmax, std::fabs(f.dual[k][c] - prev.dual[k][c]));
      }
    rec.max_rate = dmax / tc.dt;
    res.log.push_back(rec);
    if (opt.log_stream)
      *opt.log_stream << rec.step << ',' << rec.t << ',' << rec.dt << ',' << rec.a << ','
                      << rec.total_w_mass << ',' << rec.max_abs_hu << ',' << rec.max_rate << '\n';

    if (next_stop < stops.size() && t >= stops[next_stop] - eps) {
      snapshot(t, f);
      ++next_stop;
    }
  }
  res.mass_final = diagnostics(f, grid).mass;
  return res;
}

}  // namespace

AdvanceResult advance_to(Field1D& f, const RhsAssembler1D& rhs, double t0, double t_final,
                         const AdvanceOptions& opt) {
  const auto snap = [&](double t, const Field1D& u) {
    if (opt.on_snapshot_1d) opt.on_snapshot_1d(t, u);
  };
  return advance_impl<Field1D, Rhs1D>(f, rhs, rhs.grid(), t0, t_final, opt, snap);
}

AdvanceResult advance_to(Field2D& f, const RhsAssembler2D& rhs, double t0, double t_final,
                         const AdvanceOptions& opt) {
  const auto snap = [&](double t, const Field2D& u) {
    if (opt.on_snapshot_2d) opt.on_snapshot_2d(t, u);
  };
  return advance_impl<Field2D, Rhs2D>(f, rhs, rhs.grid(), t0, t_final, opt, snap);
}

}  // namespace swe
