#pragma once

#include <functional>
#include <vector>

#include "swe/state.hpp"

namespace swe {

// Overlapping uniform grids. The primal grid tiles [x_min, x_max] with n_cells
// cells C_i = [x_min + i*dx, x_min + (i+1)*dx]. The dual grid is staggered by
// dx/2: dual cell j spans consecutive primal centers and is centered at the
// primal interface x_min + j*dx. The dual grid also carries n_cells evolved
// cells (j = 0..n-1); the cell centered on x_min straddles the domain edge and
// is treated as a full cell extending into ghost territory, which makes the
// periodic wrap an exact shift by n_cells on both grids.
//
// Storage arrays hold ghosts on both sides; storage index k maps to logical
// index k - n_ghost.
struct Grid1D {
  double x_min = 0.0, x_max = 1.0;
  int n_cells = 0;
  int n_ghost = 2;
  double dx = 0.0;

  int total() const { return n_cells + 2 * n_ghost; }
  int begin() const { return n_ghost; }                // first interior storage index
  int end() const { return n_ghost + n_cells; }        // one past last interior
  double primal_center(int k) const { return x_min + (k - n_ghost + 0.5) * dx; }
  double dual_center(int k) const { return x_min + (k - n_ghost) * dx; }
  double length() const { return x_max - x_min; }
};

struct Grid2D {
  double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
  int nx = 0, ny = 0;
  int n_ghost = 2;
  double dx = 0.0, dy = 0.0;

  int total_x() const { return nx + 2 * n_ghost; }
  int total_y() const { return ny + 2 * n_ghost; }
  int total() const { return total_x() * total_y(); }
  int begin_x() const { return n_ghost; }
  int end_x() const { return n_ghost + nx; }
  int begin_y() const { return n_ghost; }
  int end_y() const { return n_ghost + ny; }
  int index(int i, int j) const { return j * total_x() + i; }
  double primal_center_x(int i) const { return x_min + (i - n_ghost + 0.5) * dx; }
  double primal_center_y(int j) const { return y_min + (j - n_ghost + 0.5) * dy; }
  double dual_center_x(int i) const { return x_min + (i - n_ghost) * dx; }
  double dual_center_y(int j) const { return y_min + (j - n_ghost) * dy; }
  double area() const { return (x_max - x_min) * (y_max - y_min); }
};

Grid1D build_grid_1d(double x_min, double x_max, int n_cells, int n_ghost = 2);
Grid2D build_grid_2d(double x_min, double x_max, double y_min, double y_max, int nx, int ny, int n_ghost = 2);

// Cell averages of the equilibrium variables on both grids, ghosts included.
struct Field1D {
  std::vector<Vec2> primal, dual;
  static Field1D zeros(const Grid1D& g) {
    Field1D f;
    f.primal.assign(g.total(), Vec2{0.0, 0.0});
    f.dual.assign(g.total(), Vec2{0.0, 0.0});
    return f;
  }
};

struct Field2D {
  std::vector<Vec3> primal, dual;
  static Field2D zeros(const Grid2D& g) {
    Field2D f;
    f.primal.assign(g.total(), Vec3{0.0, 0.0, 0.0});
    f.dual.assign(g.total(), Vec3{0.0, 0.0, 0.0});
    return f;
  }
};

enum class BCKind { absorbing, periodic, dirichlet };

// Per-component boundary prescription for dirichlet sides.
struct Prescribed {
  enum class Mode { extrapolate, value, function } mode = Mode::extrapolate;
  double value = 0.0;
  std::function<double(double)> fn;  // of time

  static Prescribed extrapolate() { return {}; }
  static Prescribed fixed(double v) { return {Mode::value, v, nullptr}; }
  static Prescribed of_time(std::function<double(double)> f) { return {Mode::function, 0.0, std::move(f)}; }
  double eval(double t) const { return mode == Mode::function ? fn(t) : value; }
};

template <int NC>
struct BoundarySide {
  BCKind kind = BCKind::absorbing;
  std::array<Prescribed, NC> comp{};
};

struct BoundarySpec1D {
  BoundarySide<2> left, right;
  void validate() const;
  static BoundarySpec1D absorbing();
  static BoundarySpec1D periodic();
};

struct BoundarySpec2D {
  BoundarySide<3> left, right, bottom, top;
  void validate() const;
  static BoundarySpec2D absorbing();
  static BoundarySpec2D periodic();
};

// Fill ghost averages on both grids at time t. Absorbing copies the nearest
// interior average, periodic wraps by n_cells, dirichlet writes the prescribed
// components and extrapolates the rest.
void apply_boundary(Field1D& f, const Grid1D& g, const BoundarySpec1D& bc, double t);
void apply_boundary(Field2D& f, const Grid2D& g, const BoundarySpec2D& bc, double t);

// Initialize interior cell averages from analytic initial data. Primal cells
// use 3-point Gauss (5x5 tensor Gauss in 2-D); dual cells are integrated per
// half (per quarter in 2-D) so that data jumps lying on primal interfaces --
// which are dual cell centers -- are captured exactly.
Field1D init_field(const Grid1D& g, const std::function<double(double)>& w0,
                   const std::function<double(double)>& hu0);
Field2D init_field(const Grid2D& g, const std::function<double(double, double)>& w0,
                   const std::function<double(double, double)>& hu0,
                   const std::function<double(double, double)>& hv0);

}  // namespace swe
