#include "swe/grid.hpp"

#include <cmath>

#include "swe/errors.hpp"
#include "swe/quadrature.hpp"

namespace swe {

Grid1D build_grid_1d(double x_min, double x_max, int n_cells, int n_ghost) {
  if (!(x_max > x_min)) throw ConfigError("grid: domain must have positive length");
  if (n_cells < 4) throw ConfigError("grid: need at least 4 cells");
  if (n_ghost < 2) throw ConfigError("grid: need at least 2 ghost layers for the reconstruction stencil");
  Grid1D g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.n_cells = n_cells;
  g.n_ghost = n_ghost;
  g.dx = (x_max - x_min) / n_cells;
  return g;
}

Grid2D build_grid_2d(double x_min, double x_max, double y_min, double y_max, int nx, int ny, int n_ghost) {
  if (!(x_max > x_min) || !(y_max > y_min)) throw ConfigError("grid: domain must have positive area");
  if (nx < 4 || ny < 4) throw ConfigError("grid: need at least 4 cells per direction");
  if (n_ghost < 2) throw ConfigError("grid: need at least 2 ghost layers for the reconstruction stencil");
  Grid2D g;
  g.x_min = x_min;
  g.x_max = x_max;
  g.y_min = y_min;
  g.y_max = y_max;
  g.nx = nx;
  g.ny = ny;
  g.n_ghost = n_ghost;
  g.dx = (x_max - x_min) / nx;
  g.dy = (y_max - y_min) / ny;
  return g;
}

void BoundarySpec1D::validate() const {
  if ((left.kind == BCKind::periodic) != (right.kind == BCKind::periodic))
    throw ConfigError("boundary: periodic must be set on both sides or neither");
}

BoundarySpec1D BoundarySpec1D::absorbing() { return {}; }

BoundarySpec1D BoundarySpec1D::periodic() {
  BoundarySpec1D bc;
  bc.left.kind = bc.right.kind = BCKind::periodic;
  return bc;
}

void BoundarySpec2D::validate() const {
  if ((left.kind == BCKind::periodic) != (right.kind == BCKind::periodic))
    throw ConfigError("boundary: periodic must be set on both x sides or neither");
  if ((bottom.kind == BCKind::periodic) != (top.kind == BCKind::periodic))
    throw ConfigError("boundary: periodic must be set on both y sides or neither");
}

BoundarySpec2D BoundarySpec2D::absorbing() { return {}; }

BoundarySpec2D BoundarySpec2D::periodic() {
  BoundarySpec2D bc;
  bc.left.kind = bc.right.kind = bc.bottom.kind = bc.top.kind = BCKind::periodic;
  return bc;
}

namespace {

template <int NC>
void fill_ghosts_1d(std::vector<std::array<double, NC>>& a, int n, int ng,
                    const BoundarySide<NC>& left, const BoundarySide<NC>& right, double t) {
  for (int g = 0; g < ng; ++g) {
    const int kl = ng - 1 - g;         // ghost index, moving outward
    const int kr = ng + n + g;
    switch (left.kind) {
      case BCKind::absorbing: a[kl] = a[ng]; break;
      case BCKind::periodic: a[kl] = a[kl + n]; break;
      case BCKind::dirichlet:
        for (int c = 0; c < NC; ++c)
          a[kl][c] = left.comp[c].mode == Prescribed::Mode::extrapolate ? a[ng][c] : left.comp[c].eval(t);
        break;
    }
    switch (right.kind) {
      case BCKind::absorbing: a[kr] = a[ng + n - 1]; break;
      case BCKind::periodic: a[kr] = a[kr - n]; break;
      case BCKind::dirichlet:
        for (int c = 0; c < NC; ++c)
          a[kr][c] = right.comp[c].mode == Prescribed::Mode::extrapolate ? a[ng + n - 1][c] : right.comp[c].eval(t);
        break;
    }
  }
}

void fill_ghosts_2d(std::vector<Vec3>& a, const Grid2D& g, const BoundarySpec2D& bc, double t) {
  const int sx = g.total_x();
  // x sides first (interior rows), then y sides over the full x range so that
  // the corner ghosts end up defined.
  for (int j = g.begin_y(); j < g.end_y(); ++j) {
    for (int q = 0; q < g.n_ghost; ++q) {
      const int il = g.n_ghost - 1 - q;
      const int ir = g.end_x() + q;
      switch (bc.left.kind) {
        case BCKind::absorbing: a[j * sx + il] = a[j * sx + g.begin_x()]; break;
        case BCKind::periodic: a[j * sx + il] = a[j * sx + il + g.nx]; break;
        case BCKind::dirichlet:
          for (int c = 0; c < 3; ++c)
            a[j * sx + il][c] = bc.left.comp[c].mode == Prescribed::Mode::extrapolate
                                    ? a[j * sx + g.begin_x()][c]
                                    : bc.left.comp[c].eval(t);
          break;
      }
      switch (bc.right.kind) {
        case BCKind::absorbing: a[j * sx + ir] = a[j * sx + g.end_x() - 1]; break;
        case BCKind::periodic: a[j * sx + ir] = a[j * sx + ir - g.nx]; break;
        case BCKind::dirichlet:
          for (int c = 0; c < 3; ++c)
            a[j * sx + ir][c] = bc.right.comp[c].mode == Prescribed::Mode::extrapolate
                                    ? a[j * sx + g.end_x() - 1][c]
                                    : bc.right.comp[c].eval(t);
          break;
      }
    }
  }
  for (int i = 0; i < g.total_x(); ++i) {
    for (int q = 0; q < g.n_ghost; ++q) {
      const int jb = g.n_ghost - 1 - q;
      const int jt = g.end_y() + q;
      switch (bc.bottom.kind) {
        case BCKind::absorbing: a[jb * sx + i] = a[g.begin_y() * sx + i]; break;
        case BCKind::periodic: a[jb * sx + i] = a[(jb + g.ny) * sx + i]; break;
        case BCKind::dirichlet:
          for (int c = 0; c < 3; ++c)
            a[jb * sx + i][c] = bc.bottom.comp[c].mode == Prescribed::Mode::extrapolate
                                    ? a[g.begin_y() * sx + i][c]
                                    : bc.bottom.comp[c].eval(t);
          break;
      }
      switch (bc.top.kind) {
        case BCKind::absorbing: a[jt * sx + i] = a[(g.end_y() - 1) * sx + i]; break;
        case BCKind::periodic: a[jt * sx + i] = a[(jt - g.ny) * sx + i]; break;
        case BCKind::dirichlet:
          for (int c = 0; c < 3; ++c)
            a[jt * sx + i][c] = bc.top.comp[c].mode == Prescribed::Mode::extrapolate
                                    ? a[(g.end_y() - 1) * sx + i][c]
                                    : bc.top.comp[c].eval(t);
          break;
      }
    }
  }
}

}  // namespace

void apply_boundary(Field1D& f, const Grid1D& g, const BoundarySpec1D& bc, double t) {
  bc.validate();
  fill_ghosts_1d<2>(f.primal, g.n_cells, g.n_ghost, bc.left, bc.right, t);
  fill_ghosts_1d<2>(f.dual, g.n_cells, g.n_ghost, bc.left, bc.right, t);
}

void apply_boundary(Field2D& f, const Grid2D& g, const BoundarySpec2D& bc, double t) {
  bc.validate();
  fill_ghosts_2d(f.primal, g, bc, t);
  fill_ghosts_2d(f.dual, g, bc, t);
}

namespace {

double cell_avg3(double a, double b, const std::function<double(double)>& f) {
  return quad::integrate3(a, b, f) / (b - a);
}

double rect_avg5(double ax, double bx, double ay, double by,
                 const std::function<double(double, double)>& f) {
  const double mx = 0.5 * (ax + bx), hx = 0.5 * (bx - ax);
  const double my = 0.5 * (ay + by), hy = 0.5 * (by - ay);
  double s = 0.0;
  for (int gx = 0; gx < 5; ++gx)
    for (int gy = 0; gy < 5; ++gy)
      s += quad::g5_w[gx] * quad::g5_w[gy] * f(mx + hx * quad::g5_x[gx], my + hy * quad::g5_x[gy]);
  return 0.25 * s;  // weights sum to 2 per axis
}

}  // namespace

Field1D init_field(const Grid1D& g, const std::function<double(double)>& w0,
                   const std::function<double(double)>& hu0) {
  Field1D f = Field1D::zeros(g);
  const double h = 0.5 * g.dx;
  for (int k = g.begin(); k < g.end(); ++k) {
    const double xc = g.primal_center(k);
    f.primal[k] = {cell_avg3(xc - h, xc + h, w0), cell_avg3(xc - h, xc + h, hu0)};
    const double dc = g.dual_center(k);
    f.dual[k] = {0.5 * (cell_avg3(dc - h, dc, w0) + cell_avg3(dc, dc + h, w0)),
                 0.5 * (cell_avg3(dc - h, dc, hu0) + cell_avg3(dc, dc + h, hu0))};
  }
  return f;
}

Field2D init_field(const Grid2D& g, const std::function<double(double, double)>& w0,
                   const std::function<double(double, double)>& hu0,
                   const std::function<double(double, double)>& hv0) {
  Field2D f = Field2D::zeros(g);
  const double hx = 0.5 * g.dx, hy = 0.5 * g.dy;
  const std::array<const std::function<double(double, double)>*, 3> fns = {&w0, &hu0, &hv0};
  for (int j = g.begin_y(); j < g.end_y(); ++j) {
    for (int i = g.begin_x(); i < g.end_x(); ++i) {
      const int k = g.index(i, j);
      const double xc = g.primal_center_x(i), yc = g.primal_center_y(j);
      const double dcx = g.dual_center_x(i), dcy = g.dual_center_y(j);
      for (int c = 0; c < 3; ++c) {
        f.primal[k][c] = rect_avg5(xc - hx, xc + hx, yc - hy, yc + hy, *fns[c]);
        f.dual[k][c] = 0.25 * (rect_avg5(dcx - hx, dcx, dcy - hy, dcy, *fns[c]) +
                               rect_avg5(dcx, dcx + hx, dcy - hy, dcy, *fns[c]) +
                               rect_avg5(dcx - hx, dcx, dcy, dcy + hy, *fns[c]) +
                               rect_avg5(dcx, dcx + hx, dcy, dcy + hy, *fns[c]));
      }
    }
  }
  return f;
}

}  // namespace swe
