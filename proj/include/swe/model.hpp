#pragma once

#include <functional>
#include <vector>

#include "swe/grid.hpp"
#include "swe/poly.hpp"

namespace swe {

struct ModelParams {
  double gravity = 9.812;
  double manning_m = 0.0;  // Manning friction coefficient (1-D system only)
  double h_min = 1e-8;     // dry guard: velocities are never evaluated below this depth
};

// Bottom elevation. Either an analytic form with its derivative, or the
// continuous piecewise linear regularization with node values at the primal
// interfaces (which are the dual cell centers). The regularized form is what
// makes discontinuous bottoms usable: the momentum source sees a bounded
// slope per segment instead of a delta.
class Bathymetry1D {
 public:
  static Bathymetry1D analytic(std::function<double(double)> b, std::function<double(double)> b_x);
  // nodes[k] is the value at x0 + k*dx.
  static Bathymetry1D piecewise_linear(std::vector<double> nodes, double x0, double dx);

  double value(double x) const;
  double slope(double x) const;
  bool regularized() const { return !nodes_.empty(); }

 private:
  std::function<double(double)> b_, bx_;
  std::vector<double> nodes_;
  double x0_ = 0.0, dx_ = 1.0;
};

class Bathymetry2D {
 public:
  static Bathymetry2D analytic(std::function<double(double, double)> b,
                               std::function<double(double, double)> b_x,
                               std::function<double(double, double)> b_y);
  // corner node (i, j) at (x0 + i*dx, y0 + j*dy); bilinear per cell.
  static Bathymetry2D bilinear(std::vector<double> nodes, int nodes_x, int nodes_y, double x0, double y0,
                               double dx, double dy);

  double value(double x, double y) const;
  double slope_x(double x, double y) const;
  double slope_y(double x, double y) const;
  bool regularized() const { return !nodes_.empty(); }

 private:
  std::function<double(double, double)> b_, bx_, by_;
  std::vector<double> nodes_;
  int nodes_x_ = 0, nodes_y_ = 0;
  double x0_ = 0.0, y0_ = 0.0, dx_ = 1.0, dy_ = 1.0;
};

// Continuous piecewise linear replacement for b over the grid (ghost cells
// included): node values are the means of the one-sided limits at the primal
// interfaces, so a bottom step contributes the midpoint value at its jump.
Bathymetry1D regularize_bathymetry(const std::function<double(double)>& b, const Grid1D& g);
// 2-D: corner values average the four one-sided limits; bilinear per cell.
Bathymetry2D regularize_bathymetry(const std::function<double(double, double)>& b, const Grid2D& g);

// Global spatial average of the water surface over the primal interior. On a
// uniform grid the cell measures cancel, so this is the arithmetic mean of
// the stored averages (exact for a constant field, which keeps the balanced
// steady state bitwise).
double global_mean_w(const Field1D& f, const Grid1D& g);
double global_mean_w(const Field2D& f, const Grid2D& g);

// Momentum-balanced flux of the system written in equilibrium variables:
// ( hu, (hu)^2/(w-B) + g(w_mean-w)B + g/2 w^2 ). At a flat lake the middle
// term carries a zero prefactor and the flux is constant in space.
Vec2 flux_wb_1d(const Vec2& a, double b_val, double w_mean, const ModelParams& p);

// Direction 0 is the x-flux, 1 the y-flux with the roles of hu and hv swapped.
Vec3 flux_wb_2d(const Vec3& a, double b_val, double w_mean, const ModelParams& p, int direction);

// Plain flux of the (h, hu) form, used by the non-well-balanced baseline.
Vec2 flux_plain_1d(const Vec2& a_h, const ModelParams& p);

// (1/(b-a)) * integral over [a, b] of (0, g*(w_mean - w(x)) * B_x(x)) by
// 3-point Gauss. Callers split target cells at reconstruction/bathymetry
// breakpoints so the integrand is smooth on [a, b].
Vec2 source_wb_1d(const TaylorPoly1D& state, const Bathymetry1D& bathy, double a, double b, double w_mean,
                  const ModelParams& p);

// Area average over [ax,bx] x [ay,by] of (0, g*(wm-w)Bx, g*(wm-w)By), 3x3 Gauss.
Vec3 source_wb_2d(const TaylorPoly2D& state, const Bathymetry2D& bathy, double ax, double bx, double ay,
                  double by, double w_mean, const ModelParams& p);

// Pointwise Manning friction: (0, -g M^2 (hu)|hu| / (w-B)^(7/3)). Vanishes at
// rest, so it does not disturb the balanced steady state.
Vec2 manning_source(const Vec2& a, double b_val, const ModelParams& p);

// Largest |u| + sqrt(g h) over the interiors of both grids, with depths taken
// at cell centers.
double max_wave_speed(const Field1D& f, const Grid1D& g, const Bathymetry1D& bathy, const ModelParams& p);
std::array<double, 2> max_wave_speed(const Field2D& f, const Grid2D& g, const Bathymetry2D& bathy,
                                     const ModelParams& p);

double froude(const Vec2& a, double b_val, const ModelParams& p);

// Depth with the dry guard; context goes into the error message.
double depth_checked(double w, double b_val, const ModelParams& p, double x, double y = 0.0);

}  // namespace swe
