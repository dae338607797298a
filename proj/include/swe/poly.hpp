#pragma once

#include <array>

#include "swe/state.hpp"

namespace swe {

// Per-cell Taylor polynomial of degree 2 about the cell center. Coefficient m
// stores phi^(m)(center)/m!, so eval is a plain monomial sum and taking a
// derivative is an integer rescale plus index shift.
struct TaylorPoly1D {
  double center = 0.0;
  std::array<std::array<double, 3>, 2> c{};  // [component][m]

  double eval(int comp, double x) const {
    const double xi = x - center;
    return c[comp][0] + xi * (c[comp][1] + xi * c[comp][2]);
  }

  Vec2 eval(double x) const { return {eval(0, x), eval(1, x)}; }

  // Exact average over [a, b]: mean of xi is (xa+xb)/2, mean of xi^2 is
  // (xa^2 + xa*xb + xb^2)/3.
  double average(int comp, double a, double b) const {
    const double xa = a - center, xb = b - center;
    const double m1 = 0.5 * (xa + xb);
    const double m2 = (xa * xa + xa * xb + xb * xb) / 3.0;
    return c[comp][0] + c[comp][1] * m1 + c[comp][2] * m2;
  }

  Vec2 average(double a, double b) const { return {average(0, a, b), average(1, a, b)}; }
};

// 2-D analog in the six-monomial space {1, xi, eta, xi^2, xi*eta, eta^2}.
struct TaylorPoly2D {
  double cx = 0.0, cy = 0.0;
  std::array<std::array<double, 6>, 3> c{};  // [component][monomial]

  double eval(int comp, double x, double y) const {
    const double xi = x - cx, eta = y - cy;
    const auto& a = c[comp];
    return a[0] + a[1] * xi + a[2] * eta + a[3] * xi * xi + a[4] * xi * eta + a[5] * eta * eta;
  }

  Vec3 eval(double x, double y) const { return {eval(0, x, y), eval(1, x, y), eval(2, x, y)}; }

  double average(int comp, double ax, double bx, double ay, double by) const {
    const double xa = ax - cx, xb = bx - cx;
    const double ya = ay - cy, yb = by - cy;
    const double mx1 = 0.5 * (xa + xb);
    const double my1 = 0.5 * (ya + yb);
    const double mx2 = (xa * xa + xa * xb + xb * xb) / 3.0;
    const double my2 = (ya * ya + ya * yb + yb * yb) / 3.0;
    const auto& a = c[comp];
    return a[0] + a[1] * mx1 + a[2] * my1 + a[3] * mx2 + a[4] * mx1 * my1 + a[5] * my2;
  }

  Vec3 average(double ax, double bx, double ay, double by) const {
    return {average(0, ax, bx, ay, by), average(1, ax, bx, ay, by), average(2, ax, bx, ay, by)};
  }
};

}  // namespace swe
