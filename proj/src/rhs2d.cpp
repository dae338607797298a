#include <cmath>

#include "swe/errors.hpp"
#include "swe/quadrature.hpp"
#include "swe/rhs.hpp"

namespace swe {

namespace {

inline double half_gauss2(double tc, double d, int half, int g) {
  const double mid = tc + (half == 0 ? -0.25 : 0.25) * d;
  return mid + 0.25 * d * quad::g2_x[g];
}

inline double quarter_gauss3(double tc, double d, int q, int g) {
  const double mid = tc + (q == 0 ? -0.25 : 0.25) * d;
  return mid + 0.25 * d * quad::g3_x[g];
}

}  // namespace

RhsAssembler2D::RhsAssembler2D(const Grid2D& grid, Bathymetry2D bathy, const ModelParams& params,
                               BoundarySpec2D bc, RhsConfig cfg)
    : grid_(grid), bathy_(std::move(bathy)), params_(params), bc_(std::move(bc)), cfg_(cfg) {
  bc_.validate();
  if (!cfg_.well_balanced) throw ConfigError("non-well-balanced baseline mode is only provided in 1-D");
  if (params_.manning_m != 0.0) throw ConfigError("Manning friction is only provided in 1-D");
  const int n = grid_.total();
  const int sx = grid_.total_x();

  // Edge-flux bathymetry values: 2 halves x 2 Gauss points per edge.
  bxe_dual_.resize(n * 4);
  bye_dual_.resize(n * 4);
  bxe_primal_.resize(n * 4);
  bye_primal_.resize(n * 4);
  // Source quadrature slopes: 4 quarters x 9 points per cell.
  qsx_dual_.resize(n * 36);
  qsy_dual_.resize(n * 36);
  qsx_primal_.resize(n * 36);
  qsy_primal_.resize(n * 36);

  for (int j = 0; j < grid_.total_y(); ++j) {
    for (int i = 0; i < grid_.total_x(); ++i) {
      const int k = j * sx + i;
      // x-edges for dual targets run along x = primal_center_x(iv=i) with the
      // y-extent of dual row j; for primal targets along x = dual_center_x(i)
      // with the y-extent of primal row j. Same pattern for y-edges.
      for (int half = 0; half < 2; ++half)
        for (int g = 0; g < 2; ++g) {
          const int e = k * 4 + half * 2 + g;
          bxe_dual_[e] = bathy_.value(grid_.primal_center_x(i), half_gauss2(grid_.dual_center_y(j), grid_.dy, half, g));
          bye_dual_[e] = bathy_.value(half_gauss2(grid_.dual_center_x(i), grid_.dx, half, g), grid_.primal_center_y(j));
          bxe_primal_[e] = bathy_.value(grid_.dual_center_x(i), half_gauss2(grid_.primal_center_y(j), grid_.dy, half, g));
          bye_primal_[e] = bathy_.value(half_gauss2(grid_.primal_center_x(i), grid_.dx, half, g), grid_.dual_center_y(j));
        }
      for (int qy = 0; qy < 2; ++qy)
        for (int qx = 0; qx < 2; ++qx)
          for (int gy = 0; gy < 3; ++gy)
            for (int gx = 0; gx < 3; ++gx) {
              const int e = k * 36 + (qy * 2 + qx) * 9 + gy * 3 + gx;
              double x = quarter_gauss3(grid_.dual_center_x(i), grid_.dx, qx, gx);
              double y = quarter_gauss3(grid_.dual_center_y(j), grid_.dy, qy, gy);
              qsx_dual_[e] = bathy_.slope_x(x, y);
              qsy_dual_[e] = bathy_.slope_y(x, y);
              x = quarter_gauss3(grid_.primal_center_x(i), grid_.dx, qx, gx);
              y = quarter_gauss3(grid_.primal_center_y(j), grid_.dy, qy, gy);
              qsx_primal_[e] = bathy_.slope_x(x, y);
              qsy_primal_[e] = bathy_.slope_y(x, y);
            }
    }
  }
}

Rhs2D RhsAssembler2D::operator()(const Field2D& field, double t, double dtau, double w_mean,
                                 MassAudit* audit) const {
  const int n = grid_.total();
  const int sx = grid_.total_x();
  const int ng = grid_.n_ghost;
  const double dx = grid_.dx, dy = grid_.dy;
  const double g_half = 0.5 * params_.gravity;

  Field2D work = field;
  apply_boundary(work, grid_, bc_, t);

  std::vector<TaylorPoly2D> pp = central_reconstruct(work.primal, grid_, GridSide::primal);
  std::vector<TaylorPoly2D> pd = central_reconstruct(work.dual, grid_, GridSide::dual);
  if (cfg_.limiter.kind == LimiterKind::hr) {
    const auto smp = smoothness_detect(work.primal, grid_, cfg_.limiter.detector_threshold);
    const auto smd = smoothness_detect(work.dual, grid_, cfg_.limiter.detector_threshold);
    hr_limit_field(pp, pd, smp, smd, grid_, cfg_.limiter);
  }

  const auto point_flux = [&](const TaylorPoly2D& poly, double x, double y, double b_val, int dir) -> Vec3 {
    const Vec3 a = poly.eval(x, y);
    const double h = a[0] - b_val;
    if (!(h >= params_.h_min))
      throw DryStateError("dry state at flux point x=" + std::to_string(x) + ", y=" + std::to_string(y));
    const double pressure = params_.gravity * ((w_mean - a[0]) * b_val) + g_half * a[0] * a[0];
    if (dir == 0) return {a[1], a[1] * a[1] / h + pressure, a[1] * a[2] / h};
    return {a[2], a[1] * a[2] / h, a[2] * a[2] / h + pressure};
  };

  Rhs2D out;
  out.primal.assign(n, Vec3{0.0, 0.0, 0.0});
  out.dual.assign(n, Vec3{0.0, 0.0, 0.0});

  // One pass per target grid. off = 0 for dual targets (sources on the primal
  // grid), off = 1 for primal targets: the lower-left source cell of target
  // (i,j) is (i-1+off, j-1+off) and edge lines sit on source cell centers.
  const auto assemble = [&](bool dual_target) {
    const int off = dual_target ? 0 : 1;
    const std::vector<TaylorPoly2D>& src = dual_target ? pp : pd;
    const std::vector<Vec3>& tavg = dual_target ? work.dual : work.primal;
    std::vector<Vec3>& rate = dual_target ? out.dual : out.primal;
    const std::vector<double>& bxe = dual_target ? bxe_dual_ : bxe_primal_;
    const std::vector<double>& bye = dual_target ? bye_dual_ : bye_primal_;
    const std::vector<double>& qsx = dual_target ? qsx_dual_ : qsx_primal_;
    const std::vector<double>& qsy = dual_target ? qsy_dual_ : qsy_primal_;
    const auto tcx = [&](int i) { return dual_target ? grid_.dual_center_x(i) : grid_.primal_center_x(i); };
    const auto tcy = [&](int j) { return dual_target ? grid_.dual_center_y(j) : grid_.primal_center_y(j); };
    const auto scx = [&](int i) { return dual_target ? grid_.primal_center_x(i) : grid_.dual_center_x(i); };
    const auto scy = [&](int j) { return dual_target ? grid_.primal_center_y(j) : grid_.dual_center_y(j); };

    // Shared edge integrals: ex[(iv, j)] = (1/dy) * line integral of the
    // x-flux along x = scx(iv) over target row j; halves resolved by the two
    // source cells the edge passes through.
    std::vector<Vec3> ex(n, Vec3{}), ey(n, Vec3{});
    for (int j = ng; j < ng + grid_.ny; ++j)
      for (int iv = ng - 1 + off; iv <= ng + grid_.nx - 1 + off; ++iv) {
        Vec3 acc{};
        for (int half = 0; half < 2; ++half) {
          const TaylorPoly2D& poly = src[(j - 1 + off + half) * sx + iv];
          for (int g = 0; g < 2; ++g) {
            const int e = (j * sx + iv) * 4 + half * 2 + g;
            acc += point_flux(poly, scx(iv), half_gauss2(tcy(j), dy, half, g), bxe[e], 0);
          }
        }
        ex[j * sx + iv] = 0.25 * acc;
      }
    for (int jv = ng - 1 + off; jv <= ng + grid_.ny - 1 + off; ++jv)
      for (int i = ng; i < ng + grid_.nx; ++i) {
        Vec3 acc{};
        for (int half = 0; half < 2; ++half) {
          const TaylorPoly2D& poly = src[jv * sx + (i - 1 + off + half)];
          for (int g = 0; g < 2; ++g) {
            const int e = (jv * sx + i) * 4 + half * 2 + g;
            acc += point_flux(poly, half_gauss2(tcx(i), dx, half, g), scy(jv), bye[e], 1);
          }
        }
        ey[jv * sx + i] = 0.25 * acc;
      }

    double relax_sum = 0.0;
    for (int j = ng; j < ng + grid_.ny; ++j)
      for (int i = ng; i < ng + grid_.nx; ++i) {
        const int k = j * sx + i;
        const double cx = tcx(i), cy = tcy(j);
        Vec3 avg{}, source{};
        for (int qy = 0; qy < 2; ++qy)
          for (int qx = 0; qx < 2; ++qx) {
            const TaylorPoly2D& poly = src[(j - 1 + off + qy) * sx + (i - 1 + off + qx)];
            const double ax = cx + (qx - 1) * 0.5 * dx, bx = cx + qx * 0.5 * dx;
            const double ay = cy + (qy - 1) * 0.5 * dy, by = cy + qy * 0.5 * dy;
            avg += poly.average(ax, bx, ay, by);
            // quarter contribution to the area-averaged balanced source
            double s_x = 0.0, s_y = 0.0;
            for (int gy = 0; gy < 3; ++gy)
              for (int gx = 0; gx < 3; ++gx) {
                const int e = k * 36 + (qy * 2 + qx) * 9 + gy * 3 + gx;
                const double wq = quad::g3_w[gx] * quad::g3_w[gy] *
                                  (w_mean - poly.eval(0, quarter_gauss3(cx, dx, qx, gx),
                                                      quarter_gauss3(cy, dy, qy, gy)));
                s_x += wq * qsx[e];
                s_y += wq * qsy[e];
              }
            source[1] += s_x;
            source[2] += s_y;
          }
        avg = 0.25 * avg;
        source = (0.25 * 0.25 * params_.gravity) * source;  // quarter weight x Gauss normalization
        if (!dual_target) relax_sum += avg[0] - tavg[k][0];
        for (int c = 0; c < 3; ++c)
          rate[k][c] = (avg[c] - tavg[k][c]) / dtau -
                       (ex[j * sx + i + off][c] - ex[j * sx + i - 1 + off][c]) / dx -
                       (ey[(j + off) * sx + i][c] - ey[(j - 1 + off) * sx + i][c]) / dy + source[c];
      }

    if (!dual_target && audit) {
      audit->relax_exchange = relax_sum * dx * dy / dtau;
      double bflux = 0.0;
      for (int j = ng; j < ng + grid_.ny; ++j)
        bflux += (ex[j * sx + ng + grid_.nx][0] - ex[j * sx + ng][0]) * dy;
      for (int i = ng; i < ng + grid_.nx; ++i)
        bflux += (ey[(ng + grid_.ny) * sx + i][0] - ey[ng * sx + i][0]) * dx;
      audit->boundary_outflow = bflux;
      double s = 0.0;
      for (int j = ng; j < ng + grid_.ny; ++j)
        for (int i = ng; i < ng + grid_.nx; ++i) s += rate[j * sx + i][0];
      audit->interior_sum = s * dx * dy;
    }
  };

  assemble(true);
  assemble(false);
  return out;
}

Rhs2D compute_rhs(const Field2D& field, const Grid2D& grid, const Bathymetry2D& bathy,
                  const ModelParams& params, double dtau, const BoundarySpec2D& bc, double t,
                  const RhsConfig& cfg) {
  RhsAssembler2D assembler(grid, bathy, params, bc, cfg);
  return assembler(field, t, dtau, global_mean_w(field, grid));
}

}  // namespace swe
