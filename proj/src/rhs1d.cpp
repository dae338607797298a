#include <cmath>

#include "swe/errors.hpp"
#include "swe/quadrature.hpp"
#include "swe/rhs.hpp"

namespace swe {

namespace {

// Quadrature abscissa g of half `half` of a cell of width dx centered at tc.
inline double half_gauss_x(double tc, double dx, int half, int g) {
  const double mid = tc + (half == 0 ? -0.25 : 0.25) * dx;
  return mid + 0.25 * dx * quad::g3_x[g];
}

}  // namespace

RhsAssembler1D::RhsAssembler1D(const Grid1D& grid, Bathymetry1D bathy, const ModelParams& params,
                               BoundarySpec1D bc, RhsConfig cfg)
    : grid_(grid), bathy_(std::move(bathy)), params_(params), bc_(std::move(bc)), cfg_(cfg) {
  bc_.validate();
  const int n = grid_.total();
  b_primal_center_.resize(n);
  b_dual_center_.resize(n);
  qb_dual_.resize(n * 6);
  qbx_dual_.resize(n * 6);
  qb_primal_.resize(n * 6);
  qbx_primal_.resize(n * 6);
  bavg_primal_.resize(n);
  bavg_dual_.resize(n);
  bx_primal_center_.resize(n);
  bx_dual_center_.resize(n);
  for (int k = 0; k < n; ++k) {
    const double pc = grid_.primal_center(k), dc = grid_.dual_center(k);
    b_primal_center_[k] = bathy_.value(pc);
    b_dual_center_[k] = bathy_.value(dc);
    bx_primal_center_[k] = bathy_.slope(pc);
    bx_dual_center_[k] = bathy_.slope(dc);
    for (int half = 0; half < 2; ++half)
      for (int g = 0; g < 3; ++g) {
        const double xd = half_gauss_x(dc, grid_.dx, half, g);
        qb_dual_[(k * 2 + half) * 3 + g] = bathy_.value(xd);
        qbx_dual_[(k * 2 + half) * 3 + g] = bathy_.slope(xd);
        const double xp = half_gauss_x(pc, grid_.dx, half, g);
        qb_primal_[(k * 2 + half) * 3 + g] = bathy_.value(xp);
        qbx_primal_[(k * 2 + half) * 3 + g] = bathy_.slope(xp);
      }
    bavg_primal_[k] = quad::integrate3(pc - 0.5 * grid_.dx, pc + 0.5 * grid_.dx,
                                       [&](double x) { return bathy_.value(x); }) /
                      grid_.dx;
    bavg_dual_[k] = (quad::integrate3(dc - 0.5 * grid_.dx, dc, [&](double x) { return bathy_.value(x); }) +
                     quad::integrate3(dc, dc + 0.5 * grid_.dx, [&](double x) { return bathy_.value(x); })) /
                    grid_.dx;
  }
}

Rhs1D RhsAssembler1D::operator()(const Field1D& field, double t, double dtau, double w_mean,
                                 MassAudit* audit) const {
  const int n = grid_.total();
  const int ng = grid_.n_ghost, nc = grid_.n_cells;
  const double dx = grid_.dx;
  const bool wb = cfg_.well_balanced;

  Field1D work = field;
  apply_boundary(work, grid_, bc_, t);
  if (!wb) {
    // Baseline mode: evolve (h, hu). The rate of h equals the rate of w for a
    // static bottom, so the caller-visible field stays in w.
    for (int k = 0; k < n; ++k) {
      work.primal[k][0] -= bavg_primal_[k];
      work.dual[k][0] -= bavg_dual_[k];
    }
  }

  std::vector<TaylorPoly1D> pp = central_reconstruct(work.primal, grid_, GridSide::primal);
  std::vector<TaylorPoly1D> pd = central_reconstruct(work.dual, grid_, GridSide::dual);
  if (cfg_.limiter.kind == LimiterKind::hr) {
    const auto sp = smoothness_detect(work.primal, grid_, cfg_.limiter.detector_threshold);
    const auto sd = smoothness_detect(work.dual, grid_, cfg_.limiter.detector_threshold);
    hr_limit_field(pp, pd, sp, sd, grid_, cfg_.limiter);
  }

  const double m2 = params_.manning_m * params_.manning_m;
  const auto point_flux = [&](const TaylorPoly1D& poly, double x, double b_val) -> Vec2 {
    const Vec2 a = poly.eval(x);
    if (wb) {
      const double h = a[0] - b_val;
      if (!(h >= params_.h_min)) throw DryStateError("dry state at flux point x=" + std::to_string(x));
      return {a[1], a[1] * a[1] / h + params_.gravity * ((w_mean - a[0]) * b_val + 0.5 * a[0] * a[0])};
    }
    if (!(a[0] >= params_.h_min)) throw DryStateError("dry state at flux point x=" + std::to_string(x));
    return {a[1], a[1] * a[1] / a[0] + 0.5 * params_.gravity * a[0] * a[0]};
  };

  // Momentum source of target cell k, one half, from one source polynomial:
  // (1/dx) * integral over the half of g(wm - w)B_x plus Manning friction.
  const auto source_half = [&](const TaylorPoly1D& poly, int k, int half, double tc,
                               const std::vector<double>& qb, const std::vector<double>& qbx) -> double {
    double s = 0.0;
    for (int g = 0; g < 3; ++g) {
      const int idx = (k * 2 + half) * 3 + g;
      const double x = half_gauss_x(tc, dx, half, g);
      const double w_val = poly.eval(0, x);
      double f = (w_mean - w_val) * qbx[idx];
      if (m2 > 0.0) {
        const double hu = poly.eval(1, x);
        const double h = w_val - qb[idx];
        if (!(h >= params_.h_min)) throw DryStateError("dry state at source point x=" + std::to_string(x));
        f -= m2 * hu * std::fabs(hu) / std::pow(h, 7.0 / 3.0);
      }
      s += quad::g3_w[g] * f;
    }
    return 0.25 * params_.gravity * s;  // (1/dx) * (dx/4) * sum
  };

  // Baseline mode uses the naive pointwise discretization instead: the cell's
  // own depth average times the bottom slope at its center (plus friction on
  // the averaged state).
  const auto source_naive = [&](int k, const std::vector<Vec2>& tavg,
                                const std::vector<double>& bxc) -> double {
    const double h = tavg[k][0];
    double f = -h * bxc[k];
    if (m2 > 0.0) {
      if (!(h >= params_.h_min)) throw DryStateError("dry state in baseline source");
      f -= m2 * tavg[k][1] * std::fabs(tavg[k][1]) / std::pow(h, 7.0 / 3.0);
    }
    return params_.gravity * f;
  };

  Rhs1D out;
  out.primal.assign(n, Vec2{0.0, 0.0});
  out.dual.assign(n, Vec2{0.0, 0.0});

  // --- dual-grid targets, primal-grid reconstruction ---
  {
    std::vector<Vec2> fp(n, Vec2{0.0, 0.0});
    for (int k = ng - 1; k <= ng + nc - 1; ++k) fp[k] = point_flux(pp[k], grid_.primal_center(k), b_primal_center_[k]);
    for (int k = ng; k < ng + nc; ++k) {
      const double tc = grid_.dual_center(k);
      const TaylorPoly1D& pl = pp[k - 1];
      const TaylorPoly1D& pr = pp[k];
      for (int c = 0; c < 2; ++c) {
        const double avg = 0.5 * (pl.average(c, tc - 0.5 * dx, tc) + pr.average(c, tc, tc + 0.5 * dx));
        out.dual[k][c] = (avg - work.dual[k][c]) / dtau - (fp[k][c] - fp[k - 1][c]) / dx;
      }
      out.dual[k][1] += wb ? source_half(pl, k, 0, tc, qb_dual_, qbx_dual_) +
                                 source_half(pr, k, 1, tc, qb_dual_, qbx_dual_)
                           : source_naive(k, work.dual, bx_dual_center_);
    }
  }

  // --- primal-grid targets, dual-grid reconstruction ---
  {
    std::vector<Vec2> fd(n, Vec2{0.0, 0.0});
    for (int k = ng; k <= ng + nc; ++k) fd[k] = point_flux(pd[k], grid_.dual_center(k), b_dual_center_[k]);
    double relax_sum = 0.0;
    for (int k = ng; k < ng + nc; ++k) {
      const double tc = grid_.primal_center(k);
      const TaylorPoly1D& pl = pd[k];
      const TaylorPoly1D& pr = pd[k + 1];
      for (int c = 0; c < 2; ++c) {
        const double avg = 0.5 * (pl.average(c, tc - 0.5 * dx, tc) + pr.average(c, tc, tc + 0.5 * dx));
        if (c == 0) relax_sum += avg - work.primal[k][0];
        out.primal[k][c] = (avg - work.primal[k][c]) / dtau - (fd[k + 1][c] - fd[k][c]) / dx;
      }
      out.primal[k][1] += wb ? source_half(pl, k, 0, tc, qb_primal_, qbx_primal_) +
                                   source_half(pr, k, 1, tc, qb_primal_, qbx_primal_)
                             : source_naive(k, work.primal, bx_primal_center_);
    }
    if (audit) {
      audit->relax_exchange = relax_sum * dx / dtau;
      audit->boundary_outflow = fd[ng + nc][0] - fd[ng][0];
      double s = 0.0;
      for (int k = ng; k < ng + nc; ++k) s += out.primal[k][0];
      audit->interior_sum = s * dx;
    }
  }

  return out;
}

Rhs1D compute_rhs(const Field1D& field, const Grid1D& grid, const Bathymetry1D& bathy,
                  const ModelParams& params, double dtau, const BoundarySpec1D& bc, double t,
                  const RhsConfig& cfg) {
  RhsAssembler1D assembler(grid, bathy, params, bc, cfg);
  return assembler(field, t, dtau, global_mean_w(field, grid));
}

}  // namespace swe
