#include "swe/limiter.hpp"

#include <cmath>

#include "swe/quadrature.hpp"

namespace swe {

double remainder_correct(double alpha, double delta) {
  const double r = alpha * delta * delta;
  return r / (1.0 + std::sqrt(std::fabs(alpha)) * std::fabs(delta) + std::fabs(r));
}

double minmod(double a, double b) {
  if (a > 0.0 && b > 0.0) return a < b ? a : b;
  if (a < 0.0 && b < 0.0) return a > b ? a : b;
  return 0.0;
}

double minmod_linear(double avg_center, double point_left, double point_right, double dx) {
  const double h = 0.5 * dx;
  return minmod((avg_center - point_left) / h, (point_right - avg_center) / h);
}

namespace {

// Average of the corrected remainder over [-h, h] about the cell center,
// by 3-point Gauss (the corrected remainder is not a polynomial).
double corrected_remainder_avg(double alpha, double h) {
  double s = 0.0;
  for (int g = 0; g < 3; ++g) s += quad::g3_w[g] * remainder_correct(alpha, h * quad::g3_x[g]);
  return 0.5 * s;
}

}  // namespace

TaylorPoly1D hr_limit_cell(const TaylorPoly1D& cell, const TaylorPoly1D& left, const TaylorPoly1D& right,
                           double dx, const LimiterConfig& cfg) {
  TaylorPoly1D out;
  out.center = cell.center;
  const double h = 0.5 * dx;
  for (int c = 0; c < 2; ++c) {
    // Stage m = 2: the first derivative is linear with zero remainder. Its
    // home-cell average is the own slope coefficient; the neighbor
    // derivatives evaluated at their centers are their slope coefficients.
    const double d2 = minmod_linear(cell.c[c][1], left.c[c][1], right.c[c][1], dx);
    const double c2 = 0.5 * d2;  // phi''/2!

    // Stage m = 1: quadratic remainder with the already-modified coefficient.
    const double abar = cell.c[c][0] + cell.c[c][2] * dx * dx / 12.0;  // original cell average
    double r_avg, r_pt;
    if (cfg.remainder_correction) {
      r_avg = corrected_remainder_avg(c2, h);
      r_pt = remainder_correct(c2, h);
    } else {
      r_avg = c2 * dx * dx / 12.0;
      r_pt = c2 * h * h;
    }
    const double lc = abar - r_avg;
    const double c1 = minmod_linear(lc, left.c[c][0] - r_pt, right.c[c][0] - r_pt, dx);

    out.c[c] = {abar - c2 * dx * dx / 12.0, c1, c2};
  }
  return out;
}

namespace {

// Corrected remainder of the 2-D quadratic part: pure terms per direction,
// the cross term split evenly between the two directions with alpha replaced
// by the cross coefficient.
double corrected_remainder_2d(double a20, double a11, double a02, double xi, double eta, bool corrected) {
  if (!corrected) return a20 * xi * xi + a11 * xi * eta + a02 * eta * eta;
  const double sa11 = std::sqrt(std::fabs(a11));
  const double cross = 0.5 * a11 * xi * eta;
  const double den_x = 1.0 + sa11 * std::fabs(xi) + std::fabs(a11) * xi * xi;
  const double den_y = 1.0 + sa11 * std::fabs(eta) + std::fabs(a11) * eta * eta;
  return remainder_correct(a20, xi) + remainder_correct(a02, eta) + cross / den_x + cross / den_y;
}

double corrected_remainder_avg_2d(double a20, double a11, double a02, double hx, double hy, bool corrected) {
  if (!corrected) return a20 * hx * hx / 3.0 + a02 * hy * hy / 3.0;  // mean of xi^2 over [-h,h] is h^2/3
  double s = 0.0;
  for (int gx = 0; gx < 3; ++gx)
    for (int gy = 0; gy < 3; ++gy)
      s += quad::g3_w[gx] * quad::g3_w[gy] *
           corrected_remainder_2d(a20, a11, a02, hx * quad::g3_x[gx], hy * quad::g3_x[gy], true);
  return 0.25 * s;
}

}  // namespace

TaylorPoly2D hr_limit_cell(const TaylorPoly2D& cell, const std::array<TaylorPoly2D, 4>& nb,
                           double dx, double dy, const LimiterConfig& cfg) {
  // nb order: 0 = (-x,-y), 1 = (+x,-y), 2 = (-x,+y), 3 = (+x,+y)
  TaylorPoly2D out;
  out.cx = cell.cx;
  out.cy = cell.cy;
  const double hx = 0.5 * dx, hy = 0.5 * dy;
  for (int c = 0; c < 3; ++c) {
    const auto& a = cell.c[c];

    // Stage m = 2: both first derivatives are linear. Gradient slopes come
    // from pairwise-averaged neighbor point values (the pair average sits at
    // the face midpoint, dx/2 or dy/2 away from the center).
    const double dxm10 = 0.5 * (nb[0].c[c][1] + nb[2].c[c][1]);  // phi_x at -x face
    const double dxp10 = 0.5 * (nb[1].c[c][1] + nb[3].c[c][1]);  // phi_x at +x face
    const double dym10 = 0.5 * (nb[0].c[c][1] + nb[1].c[c][1]);  // phi_x at -y face
    const double dyp10 = 0.5 * (nb[2].c[c][1] + nb[3].c[c][1]);  // phi_x at +y face
    const double sxx = minmod_linear(a[1], dxm10, dxp10, dx);    // ~ phi_xx
    const double sxy_a = minmod_linear(a[1], dym10, dyp10, dy);  // ~ phi_xy from phi_x

    const double dxm01 = 0.5 * (nb[0].c[c][2] + nb[2].c[c][2]);
    const double dxp01 = 0.5 * (nb[1].c[c][2] + nb[3].c[c][2]);
    const double dym01 = 0.5 * (nb[0].c[c][2] + nb[1].c[c][2]);
    const double dyp01 = 0.5 * (nb[2].c[c][2] + nb[3].c[c][2]);
    const double syy = minmod_linear(a[2], dym01, dyp01, dy);    // ~ phi_yy
    const double sxy_b = minmod_linear(a[2], dxm01, dxp01, dx);  // ~ phi_xy from phi_y

    const double c20 = 0.5 * sxx;
    const double c02 = 0.5 * syy;
    const double c11 = minmod(sxy_a, sxy_b);

    // Stage m = 1 with the modified quadratic remainder.
    const double abar = a[0] + a[3] * dx * dx / 12.0 + a[5] * dy * dy / 12.0;
    const double r_avg = corrected_remainder_avg_2d(c20, c11, c02, hx, hy, cfg.remainder_correction);
    const double lc = abar - r_avg;
    std::array<double, 4> lq;  // candidate values at the four corners
    const std::array<std::array<double, 2>, 4> sgn = {{{-1, -1}, {1, -1}, {-1, 1}, {1, 1}}};
    for (int q = 0; q < 4; ++q)
      lq[q] = nb[q].c[c][0] - corrected_remainder_2d(c20, c11, c02, sgn[q][0] * hx, sgn[q][1] * hy,
                                                     cfg.remainder_correction);
    const double c10 = minmod_linear(lc, 0.5 * (lq[0] + lq[2]), 0.5 * (lq[1] + lq[3]), dx);
    const double c01 = minmod_linear(lc, 0.5 * (lq[0] + lq[1]), 0.5 * (lq[2] + lq[3]), dy);

    const double c00 = abar - c20 * dx * dx / 12.0 - c02 * dy * dy / 12.0;
    out.c[c] = {c00, c10, c01, c20, c11, c02};
  }
  return out;
}

std::vector<std::uint8_t> smoothness_detect(const std::vector<Vec2>& avgs, const Grid1D& g, double threshold) {
  std::vector<std::uint8_t> smooth(avgs.size(), 1);
  for (int k = 1; k + 1 < static_cast<int>(avgs.size()); ++k) {
    bool ok = true;
    for (int c = 0; c < 2 && ok; ++c) {
      const double d2 = avgs[k + 1][c] - 2.0 * avgs[k][c] + avgs[k - 1][c];
      ok = std::fabs(d2) <= threshold * g.dx * (1.0 + std::fabs(avgs[k][c]));
    }
    smooth[k] = ok ? 1 : 0;
  }
  return smooth;
}

std::vector<std::uint8_t> smoothness_detect(const std::vector<Vec3>& avgs, const Grid2D& g, double threshold) {
  std::vector<std::uint8_t> smooth(avgs.size(), 1);
  const int sx = g.total_x();
  for (int j = 1; j + 1 < g.total_y(); ++j) {
    for (int i = 1; i + 1 < g.total_x(); ++i) {
      const int k = j * sx + i;
      bool ok = true;
      for (int c = 0; c < 3 && ok; ++c) {
        const double scale = 1.0 + std::fabs(avgs[k][c]);
        const double d2x = avgs[k + 1][c] - 2.0 * avgs[k][c] + avgs[k - 1][c];
        const double d2y = avgs[k + sx][c] - 2.0 * avgs[k][c] + avgs[k - sx][c];
        ok = std::fabs(d2x) <= threshold * g.dx * scale && std::fabs(d2y) <= threshold * g.dy * scale;
      }
      smooth[k] = ok ? 1 : 0;
    }
  }
  return smooth;
}

void hr_limit_field(std::vector<TaylorPoly1D>& primal, std::vector<TaylorPoly1D>& dual,
                    const std::vector<std::uint8_t>& smooth_primal,
                    const std::vector<std::uint8_t>& smooth_dual, const Grid1D& g, const LimiterConfig& cfg) {
  if (cfg.kind == LimiterKind::none) return;
  const int n = g.total();
  const std::vector<TaylorPoly1D> primal_in = primal;
  const std::vector<TaylorPoly1D> dual_in = dual;
  // Primal cell k sits between dual cells k and k+1; dual cell k between
  // primal cells k-1 and k.
  for (int k = 1; k <= n - 3; ++k)
    if (!smooth_primal[k]) primal[k] = hr_limit_cell(primal_in[k], dual_in[k], dual_in[k + 1], g.dx, cfg);
  for (int k = 2; k <= n - 2; ++k)
    if (!smooth_dual[k]) dual[k] = hr_limit_cell(dual_in[k], primal_in[k - 1], primal_in[k], g.dx, cfg);
}

void hr_limit_field(std::vector<TaylorPoly2D>& primal, std::vector<TaylorPoly2D>& dual,
                    const std::vector<std::uint8_t>& smooth_primal,
                    const std::vector<std::uint8_t>& smooth_dual, const Grid2D& g, const LimiterConfig& cfg) {
  if (cfg.kind == LimiterKind::none) return;
  const int sx = g.total_x();
  const std::vector<TaylorPoly2D> primal_in = primal;
  const std::vector<TaylorPoly2D> dual_in = dual;
  for (int j = 1; j <= g.total_y() - 3; ++j)
    for (int i = 1; i <= g.total_x() - 3; ++i) {
      const int k = j * sx + i;
      if (smooth_primal[k]) continue;
      primal[k] = hr_limit_cell(
          primal_in[k], {dual_in[k], dual_in[k + 1], dual_in[k + sx], dual_in[k + sx + 1]}, g.dx, g.dy, cfg);
    }
  for (int j = 2; j <= g.total_y() - 2; ++j)
    for (int i = 2; i <= g.total_x() - 2; ++i) {
      const int k = j * sx + i;
      if (smooth_dual[k]) continue;
      dual[k] = hr_limit_cell(
          dual_in[k], {primal_in[k - sx - 1], primal_in[k - sx], primal_in[k - 1], primal_in[k]}, g.dx, g.dy,
          cfg);
    }
}

}  // namespace swe
