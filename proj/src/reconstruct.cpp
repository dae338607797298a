#include "swe/reconstruct.hpp"

namespace swe {

std::vector<TaylorPoly1D> central_reconstruct(const std::vector<Vec2>& avgs, const Grid1D& g, GridSide side) {
  const int n = g.total();
  std::vector<TaylorPoly1D> out(n);
  const double dx = g.dx;
  for (int k = 1; k + 1 < n; ++k) {
    TaylorPoly1D& p = out[k];
    p.center = side == GridSide::primal ? g.primal_center(k) : g.dual_center(k);
    for (int c = 0; c < 2; ++c) {
      const double am = avgs[k - 1][c], a0 = avgs[k][c], ap = avgs[k + 1][c];
      const double c1 = (ap - am) / (2.0 * dx);
      const double c2 = (ap - 2.0 * a0 + am) / (2.0 * dx * dx);
      p.c[c] = {a0 - c2 * dx * dx / 12.0, c1, c2};
    }
  }
  return out;
}

std::vector<TaylorPoly2D> central_reconstruct(const std::vector<Vec3>& avgs, const Grid2D& g, GridSide side) {
  std::vector<TaylorPoly2D> out(g.total());
  const int sx = g.total_x();
  const double dx = g.dx, dy = g.dy;
  // Constrained least squares on the 3x3 stencil reduces to a fixed stencil:
  // with b_pq = avg(p,q) - avg(0,0) the normal equations decouple into
  // c10' = t1/6, c01' = t2/6, c11' = t4/4 and a 2x2 block [[6,4],[4,6]] for
  // the pure quadratic coefficients (primes denote scaling by dx^m dy^l).
  for (int j = 1; j + 1 < g.total_y(); ++j) {
    for (int i = 1; i + 1 < g.total_x(); ++i) {
      TaylorPoly2D& poly = out[j * sx + i];
      poly.cx = side == GridSide::primal ? g.primal_center_x(i) : g.dual_center_x(i);
      poly.cy = side == GridSide::primal ? g.primal_center_y(j) : g.dual_center_y(j);
      for (int c = 0; c < 3; ++c) {
        const double a00 = avgs[j * sx + i][c];
        double t1 = 0.0, t2 = 0.0, t3 = 0.0, t4 = 0.0, t5 = 0.0;
        for (int q = -1; q <= 1; ++q) {
          for (int p = -1; p <= 1; ++p) {
            if (p == 0 && q == 0) continue;
            const double b = avgs[(j + q) * sx + (i + p)][c] - a00;
            t1 += p * b;
            t2 += q * b;
            t3 += p * p * b;
            t4 += p * q * b;
            t5 += q * q * b;
          }
        }
        const double c10 = t1 / 6.0 / dx;
        const double c01 = t2 / 6.0 / dy;
        const double c20 = (3.0 * t3 - 2.0 * t5) / 10.0 / (dx * dx);
        const double c11 = t4 / 4.0 / (dx * dy);
        const double c02 = (3.0 * t5 - 2.0 * t3) / 10.0 / (dy * dy);
        const double c00 = a00 - (c20 * dx * dx + c02 * dy * dy) / 12.0;
        poly.c[c] = {c00, c10, c01, c20, c11, c02};
      }
    }
  }
  return out;
}

}  // namespace swe
