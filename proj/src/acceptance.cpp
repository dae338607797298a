#include "swe/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>

#include "swe/metrics.hpp"
#include "swe/scenarios.hpp"

namespace swe {

namespace {

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

struct Check {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!detail.str().empty()) detail << "; ";
    detail << what << (ok ? "" : " [FAILED]");
    pass = pass && ok;
  }
  void qoi(const std::string& name, double value, double threshold, bool below = true) {
    const bool ok = below ? value <= threshold : value >= threshold;
    if (!detail.str().empty()) detail << "; ";
    detail << name << "=" << sci(value) << (below ? " <= " : " >= ") << sci(threshold)
           << (ok ? "" : " [FAILED]");
    pass = pass && ok;
  }
};

// ---------------------------------------------------------------------------
// 1. balanced state preserved to round-off in 1-D, smooth and stepped bottoms
// ---------------------------------------------------------------------------
CriterionResult criterion_wb_1d() {
  Check c;
  for (const char* name : {"wb-1d-smooth", "wb-1d-step"}) {
    const auto run = run_scenario(*find_scenario_1d(name));
    c.qoi(std::string(name) + " L1(w)", run.report->l1[0], 1e-12);
    c.qoi(std::string(name) + " Linf(w)", run.report->linf[0], 1e-12);
    c.qoi(std::string(name) + " L1(hu)", run.report->l1[1], 1e-12);
    c.qoi(std::string(name) + " Linf(hu)", run.report->linf[1], 1e-12);
  }
  return {1, "well-balance-1d", c.pass, c.detail.str(), 0.0};
}

// ---------------------------------------------------------------------------
// 2. balanced state preserved in 2-D on 100x100
// ---------------------------------------------------------------------------
CriterionResult criterion_wb_2d() {
  Check c;
  const auto run = run_scenario(*find_scenario_2d("wb-2d"));
  const char* comp[] = {"w", "hu", "hv"};
  for (int i = 0; i < 3; ++i) c.qoi(std::string("Linf(") + comp[i] + ")", run.report->linf[i], 1e-12);
  for (int i = 0; i < 3; ++i) c.qoi(std::string("L1(") + comp[i] + ")", run.report->l1[i], 1e-12);
  return {2, "well-balance-2d", c.pass, c.detail.str(), 0.0};
}

// ---------------------------------------------------------------------------
// 3. third-order convergence on the smooth periodic flow (grids 400/800/1600)
// ---------------------------------------------------------------------------
CriterionResult criterion_orders() {
  Check c;
  const Scenario1D& scn = *find_scenario_1d("accuracy-1d");
  RunSwitches sw;
  sw.nx = 400;
  const auto r400 = run_scenario(scn, sw);
  sw.nx = 800;
  const auto r800 = run_scenario(scn, sw);
  sw.nx = 1600;
  const auto r1600 = run_scenario(scn, sw);
  const OrderEstimate est =
      aitken_order(r400.field, r400.grid, r800.field, r800.grid, r1600.field, r1600.grid);
  c.qoi("order L1(w)", est.l1[0], 2.85, false);
  c.qoi("order L1(hu)", est.l1[1], 2.85, false);
  c.qoi("order Linf(w)", est.linf[0], 2.7, false);
  c.qoi("order Linf(hu)", est.linf[1], 2.7, false);
  return {3, "accuracy-order", c.pass, c.detail.str(), 0.0};
}

// ---------------------------------------------------------------------------
// 4. tidal flow against the asymptotic solution, 5 boundary cells excluded
// ---------------------------------------------------------------------------
CriterionResult criterion_tidal() {
  Check c;
  const Scenario1D& scn = *find_scenario_1d("tidal");
  const auto run = run_scenario(scn);
  const Field1D ref = reference_field(scn, run.grid, scn.t_final);
  const int skip = 5;
  double dw = 0.0, dq = 0.0, mw = 0.0, mq = 0.0;
  for (int k = run.grid.begin() + skip; k < run.grid.end() - skip; ++k) {
    dw = std::max(dw, std::fabs(run.field.primal[k][0] - ref.primal[k][0]));
    dq = std::max(dq, std::fabs(run.field.primal[k][1] - ref.primal[k][1]));
    mw = std::max(mw, std::fabs(ref.primal[k][0]));
    mq = std::max(mq, std::fabs(ref.primal[k][1]));
  }
  c.qoi("rel Linf(w)", dw / mw, 1e-3);
  c.qoi("rel Linf(hu)", dq / mq, 5e-2);
  return {4, "tidal-flow", c.pass, c.detail.str(), 0.0};
}

// ---------------------------------------------------------------------------
// 5. small perturbation: balanced scheme clean, baseline at least 10x worse
// ---------------------------------------------------------------------------
double max_w_deviation_in_window(const ScenarioRun1D& run, double x_lo, double x_hi) {
  double m = 0.0;
  for (int k = run.grid.begin(); k < run.grid.end(); ++k) {
    const double x = run.grid.primal_center(k);
    if (x >= x_lo && x <= x_hi) m = std::max(m, std::fabs(run.field.primal[k][0] - 1.0));
  }
  return m;
}

CriterionResult criterion_perturbation() {
  Check c;
  const Scenario1D& scn = *find_scenario_1d("perturbation");
  RunSwitches wb, nwb;
  nwb.well_balanced = false;
  const auto run_wb = run_scenario(scn, wb);
  const auto run_nwb = run_scenario(scn, nwb);
  // Audit window behind all physical waves at t = 0.2: the left-going pulse
  // has passed below x = 0.7 and the wave reflected off the hump reaches only
  // x ~ 0.97, so [0.7, 0.95] can carry nothing but scheme artifacts.
  const double lo = 0.7, hi = 0.95;
  const double spurious_wb = max_w_deviation_in_window(run_wb, lo, hi);
  const double spurious_nwb = max_w_deviation_in_window(run_nwb, lo, hi);
  c.qoi("balanced max|w-1|", spurious_wb, 1e-4);
  c.qoi("baseline/balanced ratio", spurious_nwb / spurious_wb, 10.0, false);
  return {5, "perturbation-discrimination", c.pass, c.detail.str(), 0.0};
}

// ---------------------------------------------------------------------------
// 6. dam break, frictionless and Manning, coarse vs self-computed fine grid
// ---------------------------------------------------------------------------
struct DamBreakRun {
  ScenarioRun1D run;
  Field1D at15;
};

DamBreakRun dam_break(const Scenario1D& scn, int n) {
  RunSwitches sw;
  sw.nx = n;
  sw.snapshot_times = {15.0};
  sw.keep_snapshots = true;
  DamBreakRun out{run_scenario(scn, sw), {}};
  out.at15 = out.run.snapshots.at(0).second;
  return out;
}

CriterionResult criterion_dam_break() {
  Check c;
  const double jump = 5.0;  // initial surface drop across the dam
  double max_u[2] = {0.0, 0.0};
  int idx = 0;
  for (const char* name : {"dam-break", "dam-break-friction"}) {
    const Scenario1D& scn = *find_scenario_1d(name);
    const DamBreakRun coarse = dam_break(scn, 500);
    const DamBreakRun fine = dam_break(scn, 5000);

    const auto l1_diff = [&](const Field1D& a, const Grid1D& ga, const Field1D& b, const Grid1D& gb) {
      Field1D restricted = Field1D::zeros(ga);
      const auto vals = restrict_primal(b, gb, gb.n_cells / ga.n_cells);
      for (int k = 0; k < ga.n_cells; ++k) restricted.primal[ga.begin() + k] = vals[k];
      return error_norms(a, restricted, ga).l1[0];
    };
    c.qoi(std::string(name) + " L1(w) vs fine, t=15",
          l1_diff(coarse.at15, coarse.run.grid, fine.at15, fine.run.grid), 0.02 * jump);
    c.qoi(std::string(name) + " L1(w) vs fine, t=55",
          l1_diff(coarse.run.field, coarse.run.grid, fine.run.field, fine.run.grid), 0.02 * jump);

    double hmin = 1e300, umax = 0.0;
    for (int k = coarse.run.grid.begin(); k < coarse.run.grid.end(); ++k) {
      const double x = coarse.run.grid.primal_center(k);
      const double h = coarse.run.field.primal[k][0] - coarse.run.bathy.value(x);
      hmin = std::min(hmin, h);
      umax = std::max(umax, std::fabs(coarse.run.field.primal[k][1] / h));
    }
    c.qoi(std::string(name) + " min depth", hmin, 0.0, false);
    max_u[idx++] = umax;
  }
  c.require(max_u[1] < max_u[0], "friction damps velocity: max|u| " + sci(max_u[1]) + " < " + sci(max_u[0]));
  return {6, "dam-break", c.pass, c.detail.str(), 0.0};
}

// ---------------------------------------------------------------------------
// 7. steady hump flows: subcritical, transcritical, transcritical with shock
// ---------------------------------------------------------------------------
// A stationary shock shows up as an interface where the Froude number drops
// through 1. The late-stage approach to steady state is an exponential decay
// of waves bouncing between the inflow and outflow boundaries, so the
// residual gate is checked at the benchmark time and the run is extended in
// bounded increments until the gate holds (at most twice the benchmark time).
CriterionResult criterion_hump() {
  Check c;
  struct Case {
    const char* name;
    int mode;  // 0 subcritical, 1 transcritical smooth, 2 transcritical shock
  };
  for (const Case cs : {Case{"hump-subcritical", 0}, Case{"hump-transcritical", 1}, Case{"hump-shock", 2}}) {
    const Scenario1D& scn = *find_scenario_1d(cs.name);
    const Grid1D g = build_grid_1d(scn.x_min, scn.x_max, scn.default_n);
    const RhsAssembler1D rhs = make_assembler(scn, g);
    Field1D f = init_field(g, scn.w0, scn.hu0);
    AdvanceOptions opt;
    opt.cfl = scn.cfl;
    double t = 0.0, residual = 1e300;
    while (t < 2.0 * scn.t_final - 1e-9) {
      const double t_next = t == 0.0 ? scn.t_final : t + 50.0;
      const AdvanceResult adv = advance_to(f, rhs, t, t_next, opt);
      t = t_next;
      residual = adv.log.back().max_rate;
      if (residual <= 1e-6) break;
    }
    c.qoi(std::string(cs.name) + " steady residual (t=" + sci(t) + ")", residual, 1e-6);

    std::vector<double> wvals, frvals, xvals;
    for (int k = g.begin(); k < g.end(); ++k) {
      const double x = g.primal_center(k);
      wvals.push_back(f.primal[k][0]);
      xvals.push_back(x);
      frvals.push_back(froude(f.primal[k], rhs.bathymetry().value(x), rhs.params()));
    }
    const double fr_max = *std::max_element(frvals.begin(), frvals.end());
    // supercritical-to-subcritical transitions
    std::vector<int> down;
    for (std::size_t m = 0; m + 1 < frvals.size(); ++m)
      if (frvals[m] > 1.0 && frvals[m + 1] <= 1.0) down.push_back(static_cast<int>(m));

    if (cs.mode == 0) {
      c.qoi(std::string(cs.name) + " max Fr", fr_max, 1.0);
      c.require(down.empty(), std::string(cs.name) + " no transition");
    } else if (cs.mode == 1) {
      c.qoi(std::string(cs.name) + " max Fr", fr_max, 1.0, false);
      c.require(down.empty() && frvals.back() > 1.0,
                std::string(cs.name) + " supercritical outflow, no downstream jump");
    } else {
      c.require(down.size() == 1, std::string(cs.name) + " single Fr drop through 1 (found " +
                                      std::to_string(down.size()) + ")");
      if (down.size() == 1) {
        const int m = down.front();
        // w must rise across the <= 4 cell transition by far more than the
        // dx-scale variation of the smooth stretches away from the hump
        const int lo = std::max(m - 1, 0);
        const int hi = std::min(m + 3, static_cast<int>(wvals.size()) - 1);
        const double jump = wvals[hi] - wvals[lo];
        std::vector<double> smooth_var;
        for (std::size_t q = 0; q + 1 < wvals.size(); ++q)
          if (xvals[q] < 7.0 || xvals[q] > 13.0) smooth_var.push_back(std::fabs(wvals[q + 1] - wvals[q]));
        std::nth_element(smooth_var.begin(), smooth_var.begin() + smooth_var.size() / 2, smooth_var.end());
        const double scale = std::max(smooth_var[smooth_var.size() / 2], 1e-14);
        c.qoi(std::string(cs.name) + " shock jump / local variation", jump / scale, 10.0, false);
        c.qoi(std::string(cs.name) + " Fr upstream of shock", frvals[std::max(m - 1, 0)], 1.0, false);
        c.qoi(std::string(cs.name) + " Fr downstream of shock", frvals[hi], 1.0);
      }
    }
  }
  return {7, "hump-steady-flows", c.pass, c.detail.str(), 0.0};
}

// ---------------------------------------------------------------------------
// 8. 2-D perturbation: bounded disturbance, exact mass balance, front
//    distortion over the hump
// ---------------------------------------------------------------------------
CriterionResult criterion_perturbation_2d() {
  Check c;
  const Scenario2D& scn = *find_scenario_2d("perturbation-2d");
  RunSwitches sw;
  sw.audit_mass = true;
  sw.keep_snapshots = true;
  const auto run = run_scenario(scn, sw);
  const double eps = 0.01;

  double worst = 0.0;
  const auto scan = [&](const Field2D& f) {
    double m = 0.0;
    for (int j = run.grid.begin_y(); j < run.grid.end_y(); ++j)
      for (int i = run.grid.begin_x(); i < run.grid.end_x(); ++i)
        m = std::max(m, std::fabs(f.primal[run.grid.index(i, j)][0] - 1.0));
    return m;
  };
  for (const auto& [t, f] : run.snapshots) worst = std::max(worst, scan(f));
  worst = std::max(worst, scan(run.field));
  c.qoi("max|w-1| over outputs", worst, 3.0 * eps);

  const double drift = std::fabs(run.adv.mass_final - run.adv.mass_initial - run.adv.mass_expected_delta);
  c.qoi("rel mass drift (boundary flux accounted)", drift / run.adv.mass_initial, 1e-10);

  // Front position per row at t = 0.48: rightmost center with |w-1| above
  // eps/5. The wave is slower over the hump, so the mid rows must lag the
  // edge rows.
  const Field2D* f48 = nullptr;
  for (const auto& [t, f] : run.snapshots)
    if (std::fabs(t - 0.48) < 1e-9) f48 = &f;
  if (f48 == nullptr) {
    c.require(false, "snapshot at t=0.48 missing");
  } else {
    const auto front_x = [&](int j) {
      for (int i = run.grid.end_x() - 1; i >= run.grid.begin_x(); --i)
        if (std::fabs(f48->primal[run.grid.index(i, j)][0] - 1.0) > eps / 5.0)
          return run.grid.primal_center_x(i);
      return run.grid.x_min;
    };
    const int j_mid = run.grid.begin_y() + run.grid.ny / 2;
    const int j_edge = run.grid.begin_y() + 2;
    const double lag = front_x(j_edge) - front_x(j_mid);
    c.qoi("front lag over hump at t=0.48", lag, 3.0 * run.grid.dx, false);
  }
  return {8, "perturbation-2d", c.pass, c.detail.str(), 0.0};
}

// ---------------------------------------------------------------------------
// 9. standing property suite
// ---------------------------------------------------------------------------
CriterionResult criterion_properties() {
  Check c;

  // Remainder correction: bounded by 1 and by |alpha delta^2|, sign kept,
  // third-order close on cell scales.
  {
    bool bounds = true, close = true;
    for (double alpha : {-1000.0, -10.0, -4.0, -0.5, 0.5, 1.0, 7.5, 1000.0}) {
      for (double delta : {-100.0, -2.0, -0.3, -0.001, 0.001, 0.4, 3.0, 250.0}) {
        const double r = remainder_correct(alpha, delta);
        bounds = bounds && std::fabs(r) < 1.0 && std::fabs(r) <= std::fabs(alpha * delta * delta) &&
                 r * alpha >= 0.0;
      }
      if (std::fabs(alpha) <= 10.0) {
        for (int k = 3; k <= 10; ++k) {
          const double dx = std::pow(2.0, -k);
          for (double delta : {-dx, -0.5 * dx, 0.25 * dx, dx}) {
            const double err = std::fabs(alpha * delta * delta - remainder_correct(alpha, delta));
            const double bound = std::pow(std::fabs(alpha), 1.5) * dx * dx * dx +
                                 alpha * alpha * dx * dx * dx * dx;
            close = close && err <= bound * (1.0 + 1e-12);
          }
        }
      }
    }
    c.require(bounds, "remainder correction bounds/sign");
    c.require(close, "remainder correction O(dx^3) closeness");
  }

  // HR conservation on rough data and exactness on a global quadratic with
  // the correction off.
  {
    std::mt19937 rng(42u);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double dx = 0.1;
    bool conserve = true;
    LimiterConfig cfg;
    for (int trial = 0; trial < 200; ++trial) {
      TaylorPoly1D home, l, r;
      home.center = 0.0;
      l.center = -0.5 * dx;
      r.center = 0.5 * dx;
      for (int comp = 0; comp < 2; ++comp) {
        home.c[comp] = {u(rng), u(rng) / dx, u(rng) / (dx * dx)};
        l.c[comp] = {u(rng), u(rng) / dx, u(rng) / (dx * dx)};
        r.c[comp] = {u(rng), u(rng) / dx, u(rng) / (dx * dx)};
      }
      const TaylorPoly1D lim = hr_limit_cell(home, l, r, dx, cfg);
      for (int comp = 0; comp < 2; ++comp) {
        const double before = home.average(comp, -0.5 * dx, 0.5 * dx);
        const double after = lim.average(comp, -0.5 * dx, 0.5 * dx);
        conserve = conserve && std::fabs(after - before) <= 1e-13 * (1.0 + std::fabs(before));
      }
    }
    c.require(conserve, "HR conservation on random data");

    LimiterConfig plain;
    plain.remainder_correction = false;
    const auto taylor_of = [&](double xc) {
      // q(x) = 2 + 3x + 4x^2 expanded about xc
      TaylorPoly1D p;
      p.center = xc;
      for (int comp = 0; comp < 2; ++comp) p.c[comp] = {2.0 + 3.0 * xc + 4.0 * xc * xc, 3.0 + 8.0 * xc, 4.0};
      return p;
    };
    const double xc = 0.3;
    const TaylorPoly1D lim = hr_limit_cell(taylor_of(xc), taylor_of(xc - 0.05), taylor_of(xc + 0.05), 0.1, plain);
    bool exact = true;
    for (int m = 0; m < 3; ++m)
      exact = exact && std::fabs(lim.c[0][m] - taylor_of(xc).c[0][m]) <= 1e-11 * (1.0 + std::fabs(taylor_of(xc).c[0][m]));
    c.require(exact, "HR exactness on global quadratic (plain)");
  }

  // Reconstruction exactness for degree <= 2 data.
  {
    const Grid1D g = build_grid_1d(0.0, 1.0, 16);
    Field1D f = init_field(
        g, [](double x) { return 1.0 + 2.0 * x + 3.0 * x * x; }, [](double x) { return 0.5 - x; });
    apply_boundary(f, g, BoundarySpec1D::periodic(), 0.0);  // stencil fill; values overwritten next
    for (int k = 0; k < g.total(); ++k) {
      const double xc = g.primal_center(k);
      f.primal[k] = {1.0 + 2.0 * xc + 3.0 * (xc * xc + g.dx * g.dx / 12.0), 0.5 - xc};
      const double dc = g.dual_center(k);
      f.dual[k] = {1.0 + 2.0 * dc + 3.0 * (dc * dc + g.dx * g.dx / 12.0), 0.5 - dc};
    }
    const auto polys = central_reconstruct(f.primal, g, GridSide::primal);
    bool exact = true;
    for (int k = 2; k < g.total() - 2; ++k) {
      const double xc = g.primal_center(k);
      exact = exact && std::fabs(polys[k].c[0][0] - (1.0 + 2.0 * xc + 3.0 * xc * xc)) < 1e-12;
      exact = exact && std::fabs(polys[k].c[0][1] - (2.0 + 6.0 * xc)) < 1e-11;
      exact = exact && std::fabs(polys[k].c[0][2] - 3.0) < 1e-10;
      exact = exact && std::fabs(polys[k].c[1][1] - (-1.0)) < 1e-11;
    }
    c.require(exact, "reconstruction exactness on quadratic");
  }

  // SSP-RK3 reproduces the cubic Taylor polynomial on u' = lambda u.
  {
    const Grid1D g = build_grid_1d(0.0, 1.0, 8);
    Field1D u = Field1D::zeros(g);
    for (int k = 0; k < g.total(); ++k) u.primal[k] = u.dual[k] = {1.0, 2.0};
    const double lambda = -0.7, dt = 0.3;
    const auto rhs = [&](const Field1D& v, double) {
      Rhs1D r;
      r.primal.resize(v.primal.size());
      r.dual.resize(v.dual.size());
      for (std::size_t k = 0; k < v.primal.size(); ++k) {
        for (int cc = 0; cc < 2; ++cc) {
          r.primal[k][cc] = lambda * v.primal[k][cc];
          r.dual[k][cc] = lambda * v.dual[k][cc];
        }
      }
      return r;
    };
    ssp_rk3_step(u, rhs, dt, 0.0);
    const double z = lambda * dt;
    const double expected = 1.0 + z + z * z / 2.0 + z * z * z / 6.0;
    c.require(std::fabs(u.primal[3][0] - expected) < 1e-14 && std::fabs(u.dual[3][1] - 2.0 * expected) < 1e-14,
              "SSP-RK3 cubic Taylor on linear ODE");
  }

  // Mass conservation per grid under periodic boundaries.
  {
    const Scenario1D& scn = *find_scenario_1d("accuracy-1d");
    RunSwitches sw;
    sw.nx = 128;
    sw.t_final = 0.02;
    const auto run = run_scenario(scn, sw);
    double m0p = 0.0, m1p = 0.0, m0d = 0.0, m1d = 0.0;
    for (int k = run.grid.begin(); k < run.grid.end(); ++k) {
      m0p += run.initial.primal[k][0];
      m1p += run.field.primal[k][0];
      m0d += run.initial.dual[k][0];
      m1d += run.field.dual[k][0];
    }
    c.qoi("periodic mass drift (primal)", std::fabs(m1p - m0p) * run.grid.dx / (m0p * run.grid.dx), 1e-12);
    c.qoi("periodic mass drift (dual)", std::fabs(m1d - m0d) / m0d, 1e-12);
  }

  // Forward Euler at theta = 1 equals the fully staggered one-step update,
  // assembled independently from the public pieces.
  {
    const Grid1D g = build_grid_1d(0.0, 4.0, 32);
    const Bathymetry1D bathy = Bathymetry1D::analytic(
        [](double x) { return 0.3 + 0.2 * std::sin(1.5707963267948966 * x); },
        [](double x) { return 0.2 * 1.5707963267948966 * std::cos(1.5707963267948966 * x); });
    const ModelParams params;
    const BoundarySpec1D bc = BoundarySpec1D::periodic();
    std::mt19937 rng(7u);
    std::uniform_real_distribution<double> uw(2.0, 3.0), uq(-0.5, 0.5);
    Field1D f = Field1D::zeros(g);
    for (int k = g.begin(); k < g.end(); ++k) {
      f.primal[k] = {uw(rng), uq(rng)};
      f.dual[k] = {uw(rng), uq(rng)};
    }
    RhsConfig cfg;
    RhsAssembler1D assembler(g, bathy, params, bc, cfg);
    const double w_mean = global_mean_w(f, g);
    const double a = max_wave_speed(f, g, bathy, params);
    const double dtau = 0.5 * g.dx / a;
    const Rhs1D rhs = assembler(f, 0.0, dtau, w_mean);

    Field1D work = f;
    apply_boundary(work, g, bc, 0.0);
    auto pp = central_reconstruct(work.primal, g, GridSide::primal);
    auto pd = central_reconstruct(work.dual, g, GridSide::dual);
    const auto sp = smoothness_detect(work.primal, g, cfg.limiter.detector_threshold);
    const auto sd = smoothness_detect(work.dual, g, cfg.limiter.detector_threshold);
    hr_limit_field(pp, pd, sp, sd, g, cfg.limiter);

    double worst = 0.0;
    for (int k = g.begin(); k < g.end(); ++k) {
      // staggered full step for the dual cell k from the primal pieces
      const double tc = g.dual_center(k);
      const Vec2 fl = flux_wb_1d(pp[k - 1].eval(g.primal_center(k - 1)),
                                 bathy.value(g.primal_center(k - 1)), w_mean, params);
      const Vec2 fr = flux_wb_1d(pp[k].eval(g.primal_center(k)), bathy.value(g.primal_center(k)), w_mean,
                                 params);
      const Vec2 srcL = source_wb_1d(pp[k - 1], bathy, tc - 0.5 * g.dx, tc, w_mean, params);
      const Vec2 srcR = source_wb_1d(pp[k], bathy, tc, tc + 0.5 * g.dx, w_mean, params);
      for (int comp = 0; comp < 2; ++comp) {
        const double staggered_avg = 0.5 * (pp[k - 1].average(comp, tc - 0.5 * g.dx, tc) +
                                            pp[k].average(comp, tc, tc + 0.5 * g.dx));
        const double full = staggered_avg - dtau / g.dx * (fr[comp] - fl[comp]) +
                            dtau * 0.5 * (srcL[comp] + srcR[comp]);
        const double euler = work.dual[k][comp] + dtau * rhs.dual[k][comp];
        worst = std::max(worst, std::fabs(full - euler));
      }
    }
    c.qoi("theta=1 staggered vs Euler", worst, 1e-12);
  }

  return {9, "property-suite", c.pass, c.detail.str(), 0.0};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const std::vector<int>& only, std::ostream* os) {
  using CriterionFn = CriterionResult (*)();
  const std::pair<int, CriterionFn> table[] = {
      {1, &criterion_wb_1d},         {2, &criterion_wb_2d},  {3, &criterion_orders},
      {4, &criterion_tidal},         {5, &criterion_perturbation}, {6, &criterion_dam_break},
      {7, &criterion_hump},          {8, &criterion_perturbation_2d}, {9, &criterion_properties},
  };
  std::vector<CriterionResult> results;
  for (const auto& [id, fn] : table) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = fn();
    } catch (const std::exception& e) {
      r.id = id;
      r.name = "criterion-" + std::to_string(id);
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (os)
      *os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << ": " << r.detail << " ("
          << static_cast<int>(r.seconds) << "s)" << std::endl;
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<CriterionResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return !results.empty();
}

}  // namespace swe
