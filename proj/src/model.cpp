#include "swe/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "swe/errors.hpp"
#include "swe/quadrature.hpp"

namespace swe {

Bathymetry1D Bathymetry1D::analytic(std::function<double(double)> b, std::function<double(double)> b_x) {
  Bathymetry1D out;
  out.b_ = std::move(b);
  out.bx_ = std::move(b_x);
  return out;
}

Bathymetry1D Bathymetry1D::piecewise_linear(std::vector<double> nodes, double x0, double dx) {
  Bathymetry1D out;
  out.nodes_ = std::move(nodes);
  out.x0_ = x0;
  out.dx_ = dx;
  return out;
}

double Bathymetry1D::value(double x) const {
  if (nodes_.empty()) return b_(x);
  const double s = (x - x0_) / dx_;
  int seg = static_cast<int>(std::floor(s));
  seg = std::clamp(seg, 0, static_cast<int>(nodes_.size()) - 2);
  const double f = s - seg;
  return nodes_[seg] + f * (nodes_[seg + 1] - nodes_[seg]);
}

double Bathymetry1D::slope(double x) const {
  if (nodes_.empty()) return bx_(x);
  const double s = (x - x0_) / dx_;
  int seg = static_cast<int>(std::floor(s));
  seg = std::clamp(seg, 0, static_cast<int>(nodes_.size()) - 2);
  return (nodes_[seg + 1] - nodes_[seg]) / dx_;
}

Bathymetry2D Bathymetry2D::analytic(std::function<double(double, double)> b,
                                    std::function<double(double, double)> b_x,
                                    std::function<double(double, double)> b_y) {
  Bathymetry2D out;
  out.b_ = std::move(b);
  out.bx_ = std::move(b_x);
  out.by_ = std::move(b_y);
  return out;
}

Bathymetry2D Bathymetry2D::bilinear(std::vector<double> nodes, int nodes_x, int nodes_y, double x0, double y0,
                                    double dx, double dy) {
  Bathymetry2D out;
  out.nodes_ = std::move(nodes);
  out.nodes_x_ = nodes_x;
  out.nodes_y_ = nodes_y;
  out.x0_ = x0;
  out.y0_ = y0;
  out.dx_ = dx;
  out.dy_ = dy;
  return out;
}

namespace {
struct BilinearCell {
  double c00, c10, c01, c11, fx, fy;
};
}  // namespace

double Bathymetry2D::value(double x, double y) const {
  if (nodes_.empty()) return b_(x, y);
  const double sx = (x - x0_) / dx_, sy = (y - y0_) / dy_;
  int i = std::clamp(static_cast<int>(std::floor(sx)), 0, nodes_x_ - 2);
  int j = std::clamp(static_cast<int>(std::floor(sy)), 0, nodes_y_ - 2);
  const double fx = sx - i, fy = sy - j;
  const double c00 = nodes_[j * nodes_x_ + i], c10 = nodes_[j * nodes_x_ + i + 1];
  const double c01 = nodes_[(j + 1) * nodes_x_ + i], c11 = nodes_[(j + 1) * nodes_x_ + i + 1];
  return c00 * (1 - fx) * (1 - fy) + c10 * fx * (1 - fy) + c01 * (1 - fx) * fy + c11 * fx * fy;
}

double Bathymetry2D::slope_x(double x, double y) const {
  if (nodes_.empty()) return bx_(x, y);
  const double sx = (x - x0_) / dx_, sy = (y - y0_) / dy_;
  int i = std::clamp(static_cast<int>(std::floor(sx)), 0, nodes_x_ - 2);
  int j = std::clamp(static_cast<int>(std::floor(sy)), 0, nodes_y_ - 2);
  const double fy = sy - j;
  const double c00 = nodes_[j * nodes_x_ + i], c10 = nodes_[j * nodes_x_ + i + 1];
  const double c01 = nodes_[(j + 1) * nodes_x_ + i], c11 = nodes_[(j + 1) * nodes_x_ + i + 1];
  return ((c10 - c00) * (1 - fy) + (c11 - c01) * fy) / dx_;
}

double Bathymetry2D::slope_y(double x, double y) const {
  if (nodes_.empty()) return by_(x, y);
  const double sx = (x - x0_) / dx_, sy = (y - y0_) / dy_;
  int i = std::clamp(static_cast<int>(std::floor(sx)), 0, nodes_x_ - 2);
  int j = std::clamp(static_cast<int>(std::floor(sy)), 0, nodes_y_ - 2);
  const double fx = sx - i;
  const double c00 = nodes_[j * nodes_x_ + i], c10 = nodes_[j * nodes_x_ + i + 1];
  const double c01 = nodes_[(j + 1) * nodes_x_ + i], c11 = nodes_[(j + 1) * nodes_x_ + i + 1];
  return ((c01 - c00) * (1 - fx) + (c11 - c10) * fx) / dy_;
}

Bathymetry1D regularize_bathymetry(const std::function<double(double)>& b, const Grid1D& g) {
  // One-sided limits taken numerically just off the node.
  const double eps = 1e-7 * g.dx;
  const double x0 = g.x_min - g.n_ghost * g.dx;
  std::vector<double> nodes(g.total() + 1);
  for (int k = 0; k < static_cast<int>(nodes.size()); ++k) {
    const double x = x0 + k * g.dx;
    nodes[k] = 0.5 * (b(x - eps) + b(x + eps));
  }
  return Bathymetry1D::piecewise_linear(std::move(nodes), x0, g.dx);
}

Bathymetry2D regularize_bathymetry(const std::function<double(double, double)>& b, const Grid2D& g) {
  const double ex = 1e-7 * g.dx, ey = 1e-7 * g.dy;
  const double x0 = g.x_min - g.n_ghost * g.dx;
  const double y0 = g.y_min - g.n_ghost * g.dy;
  const int nx = g.total_x() + 1, ny = g.total_y() + 1;
  std::vector<double> nodes(static_cast<std::size_t>(nx) * ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      const double x = x0 + i * g.dx, y = y0 + j * g.dy;
      nodes[j * nx + i] =
          0.25 * (b(x - ex, y - ey) + b(x + ex, y - ey) + b(x - ex, y + ey) + b(x + ex, y + ey));
    }
  return Bathymetry2D::bilinear(std::move(nodes), nx, ny, x0, y0, g.dx, g.dy);
}

double global_mean_w(const Field1D& f, const Grid1D& g) {
  double s = 0.0;
  for (int k = g.begin(); k < g.end(); ++k) s += f.primal[k][0];
  return s / g.n_cells;
}

double global_mean_w(const Field2D& f, const Grid2D& g) {
  double s = 0.0;
  for (int j = g.begin_y(); j < g.end_y(); ++j)
    for (int i = g.begin_x(); i < g.end_x(); ++i) s += f.primal[g.index(i, j)][0];
  return s / (static_cast<double>(g.nx) * g.ny);
}

double depth_checked(double w, double b_val, const ModelParams& p, double x, double y) {
  const double h = w - b_val;
  if (!(h >= p.h_min)) {
    std::ostringstream os;
    os << "dry state: depth " << h << " below h_min " << p.h_min << " at x=" << x;
    if (y != 0.0) os << ", y=" << y;
    throw DryStateError(os.str());
  }
  return h;
}

Vec2 flux_wb_1d(const Vec2& a, double b_val, double w_mean, const ModelParams& p) {
  const double h = depth_checked(a[0], b_val, p, 0.0);
  const double hu = a[1];
  return {hu, hu * hu / h + p.gravity * ((w_mean - a[0]) * b_val + 0.5 * a[0] * a[0])};
}

Vec3 flux_wb_2d(const Vec3& a, double b_val, double w_mean, const ModelParams& p, int direction) {
  const double h = depth_checked(a[0], b_val, p, 0.0);
  const double hu = a[1], hv = a[2];
  const double pressure = p.gravity * ((w_mean - a[0]) * b_val + 0.5 * a[0] * a[0]);
  if (direction == 0) return {hu, hu * hu / h + pressure, hu * hv / h};
  return {hv, hu * hv / h, hv * hv / h + pressure};
}

Vec2 flux_plain_1d(const Vec2& a_h, const ModelParams& p) {
  const double h = a_h[0];
  if (!(h >= p.h_min)) throw DryStateError("dry state in plain flux");
  const double hu = a_h[1];
  return {hu, hu * hu / h + 0.5 * p.gravity * h * h};
}

Vec2 source_wb_1d(const TaylorPoly1D& state, const Bathymetry1D& bathy, double a, double b, double w_mean,
                  const ModelParams& p) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (int g = 0; g < 3; ++g) {
    const double x = mid + half * quad::g3_x[g];
    s += quad::g3_w[g] * (w_mean - state.eval(0, x)) * bathy.slope(x);
  }
  return {0.0, 0.5 * p.gravity * s};  // (1/(b-a)) * (b-a)/2 * sum
}

Vec3 source_wb_2d(const TaylorPoly2D& state, const Bathymetry2D& bathy, double ax, double bx, double ay,
                  double by, double w_mean, const ModelParams& p) {
  const double mx = 0.5 * (ax + bx), hx = 0.5 * (bx - ax);
  const double my = 0.5 * (ay + by), hy = 0.5 * (by - ay);
  double sx = 0.0, sy = 0.0;
  for (int gx = 0; gx < 3; ++gx)
    for (int gy = 0; gy < 3; ++gy) {
      const double x = mx + hx * quad::g3_x[gx], y = my + hy * quad::g3_x[gy];
      const double wdiff = quad::g3_w[gx] * quad::g3_w[gy] * (w_mean - state.eval(0, x, y));
      sx += wdiff * bathy.slope_x(x, y);
      sy += wdiff * bathy.slope_y(x, y);
    }
  return {0.0, 0.25 * p.gravity * sx, 0.25 * p.gravity * sy};
}

Vec2 manning_source(const Vec2& a, double b_val, const ModelParams& p) {
  if (p.manning_m == 0.0 || a[1] == 0.0) return {0.0, 0.0};
  const double h = depth_checked(a[0], b_val, p, 0.0);
  const double hu = a[1];
  return {0.0, -p.gravity * p.manning_m * p.manning_m * hu * std::fabs(hu) / std::pow(h, 7.0 / 3.0)};
}

namespace {
double speed_1d(const Vec2& a, double b_val, const ModelParams& p, double x) {
  const double h = depth_checked(a[0], b_val, p, x);
  return std::fabs(a[1] / h) + std::sqrt(p.gravity * h);
}
}  // namespace

double max_wave_speed(const Field1D& f, const Grid1D& g, const Bathymetry1D& bathy, const ModelParams& p) {
  double a = 0.0;
  for (int k = g.begin(); k < g.end(); ++k) {
    a = std::max(a, speed_1d(f.primal[k], bathy.value(g.primal_center(k)), p, g.primal_center(k)));
    a = std::max(a, speed_1d(f.dual[k], bathy.value(g.dual_center(k)), p, g.dual_center(k)));
  }
  return a;
}

std::array<double, 2> max_wave_speed(const Field2D& f, const Grid2D& g, const Bathymetry2D& bathy,
                                     const ModelParams& p) {
  double ax = 0.0, ay = 0.0;
  const auto visit = [&](const Vec3& a, double x, double y) {
    const double h = depth_checked(a[0], bathy.value(x, y), p, x, y);
    const double c = std::sqrt(p.gravity * h);
    ax = std::max(ax, std::fabs(a[1] / h) + c);
    ay = std::max(ay, std::fabs(a[2] / h) + c);
  };
  for (int j = g.begin_y(); j < g.end_y(); ++j)
    for (int i = g.begin_x(); i < g.end_x(); ++i) {
      visit(f.primal[g.index(i, j)], g.primal_center_x(i), g.primal_center_y(j));
      visit(f.dual[g.index(i, j)], g.dual_center_x(i), g.dual_center_y(j));
    }
  return {ax, ay};
}

double froude(const Vec2& a, double b_val, const ModelParams& p) {
  const double h = depth_checked(a[0], b_val, p, 0.0);
  return (a[1] / h) / std::sqrt(p.gravity * h);
}

}  // namespace swe
