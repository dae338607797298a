#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "swe/grid.hpp"
#include "swe/limiter.hpp"

using namespace swe;

namespace {

TaylorPoly1D quadratic_about(double xc, double a0, double a1, double a2) {
  // q(x) = a0 + a1 x + a2 x^2 expanded about xc, same in both components
  TaylorPoly1D p;
  p.center = xc;
  for (int c = 0; c < 2; ++c) p.c[c] = {a0 + a1 * xc + a2 * xc * xc, a1 + 2.0 * a2 * xc, a2};
  return p;
}

}  // namespace

TEST_CASE("remainder correction: hand values") {
  CHECK(remainder_correct(0.0, 0.3) == 0.0);
  CHECK(remainder_correct(0.0, 1e9) == 0.0);
  // alpha=1, delta=1: 1/(1+1+1)
  CHECK(remainder_correct(1.0, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  // alpha=-4, delta=0.5: -1/(1+2*0.5+4*0.25)
  CHECK(remainder_correct(-4.0, 0.5) == doctest::Approx(-1.0 / 3.0).epsilon(1e-15));
  // large offsets saturate toward sign(alpha)
  CHECK(remainder_correct(2.0, 1e8) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(remainder_correct(-2.0, 1e8) == doctest::Approx(-1.0).epsilon(1e-6));
}

TEST_CASE("remainder correction: bounds, sign, closeness") {
  for (double alpha : {-1e6, -37.5, -1.0, -1e-4, 1e-4, 0.8, 12.0, 1e6}) {
    for (double delta : {-1e5, -3.0, -0.11, -1e-6, 1e-6, 0.27, 8.0, 1e5}) {
      const double r = remainder_correct(alpha, delta);
      CHECK(std::fabs(r) < 1.0);
      CHECK(std::fabs(r) <= std::fabs(alpha * delta * delta));
      CHECK(r * alpha >= 0.0);
    }
  }
  // |R - Rcorr| <= |alpha|^{3/2} dx^3 + alpha^2 dx^4 for |delta| <= dx
  for (double alpha : {-10.0, -3.0, -0.2, 0.5, 4.0, 10.0}) {
    for (int k = 2; k <= 12; ++k) {
      const double dx = std::pow(2.0, -k);
      for (double f : {-1.0, -0.33, 0.5, 1.0}) {
        const double delta = f * dx;
        const double err = std::fabs(alpha * delta * delta - remainder_correct(alpha, delta));
        const double bound =
            std::pow(std::fabs(alpha), 1.5) * dx * dx * dx + alpha * alpha * dx * dx * dx * dx;
        CHECK(err <= bound * (1.0 + 1e-12));
      }
    }
  }
}

TEST_CASE("minmod slope reconstruction") {
  // collinear data keeps the common slope
  CHECK(minmod_linear(1.0, 0.5, 1.5, 1.0) == doctest::Approx(1.0));
  // a local extremum clips to zero
  CHECK(minmod_linear(0.0, 1.0, 1.0, 1.0) == 0.0);
  // dx=1, data (0, -0.25, 1.0): one-sided slopes 0.5 and 2.0
  CHECK(minmod_linear(0.0, -0.25, 1.0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(minmod(3.0, 2.0) == 2.0);
  CHECK(minmod(-3.0, -2.0) == -2.0);
  CHECK(minmod(3.0, -2.0) == 0.0);
  CHECK(minmod(0.0, 5.0) == 0.0);
}

TEST_CASE("limiting a restriction of one global quadratic is the identity (plain)") {
  // All candidate slopes coincide when the remainder is subtracted exactly,
  // so plain hierarchical limiting returns the input to round-off.
  LimiterConfig plain;
  plain.remainder_correction = false;
  const double dx = 0.1, xc = 0.45;
  const auto home = quadratic_about(xc, 2.0, -3.0, 5.0);
  const auto l = quadratic_about(xc - 0.5 * dx, 2.0, -3.0, 5.0);
  const auto r = quadratic_about(xc + 0.5 * dx, 2.0, -3.0, 5.0);
  const TaylorPoly1D lim = hr_limit_cell(home, l, r, dx, plain);
  for (int m = 0; m < 3; ++m)
    CHECK(lim.c[0][m] == doctest::Approx(home.c[0][m]).epsilon(1e-12));
}

TEST_CASE("with the correction on the quadratic survives to O(dx^3)") {
  LimiterConfig cfg;
  double prev = 0.0;
  for (int k = 3; k <= 6; ++k) {
    const double dx = std::pow(2.0, -k), xc = 0.3;
    const auto home = quadratic_about(xc, 1.0, 2.0, 3.0);
    const auto l = quadratic_about(xc - 0.5 * dx, 1.0, 2.0, 3.0);
    const auto r = quadratic_about(xc + 0.5 * dx, 1.0, 2.0, 3.0);
    const TaylorPoly1D lim = hr_limit_cell(home, l, r, dx, cfg);
    double err = 0.0;
    for (double f : {-0.5, -0.2, 0.0, 0.3, 0.5})
      err = std::max(err, std::fabs(lim.eval(0, xc + f * dx) - home.eval(0, xc + f * dx)));
    if (prev > 0.0) CHECK(std::log2(prev / err) >= 2.5);
    prev = err;
  }
}

TEST_CASE("constants limit to constants and conserve the average") {
  LimiterConfig cfg;
  TaylorPoly1D home, l, r;
  home.center = 0.0;
  l.center = -0.05;
  r.center = 0.05;
  for (int c = 0; c < 2; ++c) {
    home.c[c] = {4.0, 0.0, 0.0};
    l.c[c] = {4.0, 0.0, 0.0};
    r.c[c] = {4.0, 0.0, 0.0};
  }
  const TaylorPoly1D lim = hr_limit_cell(home, l, r, 0.1, cfg);
  CHECK(lim.c[0][0] == 4.0);
  CHECK(lim.c[0][1] == 0.0);
  CHECK(lim.c[0][2] == 0.0);
}

TEST_CASE("step data: bounded slope, range inside the stencil hull") {
  // Averages ...,0,0,1,1,... with the jump on the home cell's right edge.
  // The limited polynomial must not steepen beyond jump/dx and its range over
  // the cell stays within the stencil average hull padded by the corrected
  // remainder bound.
  const double dx = 0.1;
  const Grid1D g = build_grid_1d(0.0, 1.0, 10);
  Field1D f = Field1D::zeros(g);
  for (int k = 0; k < g.total(); ++k) {
    const double step_p = g.primal_center(k) > 0.5 ? 1.0 : 0.0;
    f.primal[k] = {step_p, step_p};
    // dual centers on the jump hold the split average
    const double dc = g.dual_center(k);
    const double step_d = dc > 0.5 ? 1.0 : (std::fabs(dc - 0.5) < 1e-12 ? 0.5 : 0.0);
    f.dual[k] = {step_d, step_d};
  }
  const auto pp = central_reconstruct(f.primal, g, GridSide::primal);
  const auto pd = central_reconstruct(f.dual, g, GridSide::dual);
  LimiterConfig cfg;
  // home: primal cell with center 0.45 (last zero cell)
  int k_step = -1;
  for (int k = g.begin(); k < g.end(); ++k)
    if (std::fabs(g.primal_center(k) - 0.45) < 1e-12) k_step = k;
  REQUIRE(k_step > 0);
  const TaylorPoly1D lim = hr_limit_cell(pp[k_step], pd[k_step], pd[k_step + 1], dx, cfg);
  CHECK(std::fabs(lim.c[0][1]) <= 1.0 / dx + 1e-12);
  // Enumerate the stage-1 candidate data the limiter saw: the home average
  // and the flanking center values with the corrected remainder subtracted.
  // The limited polynomial's range over the cell must stay inside their hull
  // padded by the corrected-remainder bound.
  const double alpha = lim.c[0][2];
  const double r_pt = remainder_correct(alpha, 0.5 * dx);
  double r_avg = 0.0;
  for (double f : {-0.3872983346207417, 0.0, 0.3872983346207417}) {  // 3-pt Gauss on [-dx/2, dx/2]
    const double wgt = f == 0.0 ? 8.0 / 9.0 : 5.0 / 9.0;
    r_avg += 0.5 * wgt * remainder_correct(alpha, f * dx);
  }
  const double abar = 0.0;  // home cell average
  const double cand_lo = std::min({abar - r_avg, pd[k_step].c[0][0] - r_pt, pd[k_step + 1].c[0][0] - r_pt});
  const double cand_hi = std::max({abar - r_avg, pd[k_step].c[0][0] - r_pt, pd[k_step + 1].c[0][0] - r_pt});
  double lo = 1e300, hi = -1e300;
  for (int s = 0; s <= 100; ++s) {
    const double x = 0.4 + 0.001 * s;
    lo = std::min(lo, lim.eval(0, x));
    hi = std::max(hi, lim.eval(0, x));
  }
  const double pad = std::fabs(r_avg) + std::fabs(alpha) * dx * dx / 3.0 + 1e-12;
  CHECK(lo >= cand_lo - pad);
  CHECK(hi <= cand_hi + pad);
}

TEST_CASE("extremum clipping: slope vanishes at a local extremum of the averages") {
  const double dx = 0.1;
  TaylorPoly1D home, l, r;
  home.center = 0.0;
  l.center = -0.05;
  r.center = 0.05;
  for (int c = 0; c < 2; ++c) {
    home.c[c] = {1.0, 0.0, 0.0};  // local max: neighbors sit lower
    l.c[c] = {0.2, 0.0, 0.0};
    r.c[c] = {0.4, 0.0, 0.0};
  }
  LimiterConfig cfg;
  const TaylorPoly1D lim = hr_limit_cell(home, l, r, dx, cfg);
  CHECK(lim.c[0][1] == 0.0);
}

TEST_CASE("smoothness detector") {
  const Grid1D g = build_grid_1d(0.0, 1.0, 200);
  SUBCASE("linear data is smooth everywhere") {
    std::vector<Vec2> a(g.total());
    for (int k = 0; k < g.total(); ++k) a[k] = {3.0 + 0.5 * g.primal_center(k), 0.0};
    const auto s = smoothness_detect(a, g, 1.0);
    for (int k = 1; k + 1 < g.total(); ++k) CHECK(s[k] == 1);
  }
  SUBCASE("resolved sine is smooth: second differences are O(dx^2)") {
    std::vector<Vec2> a(g.total());
    for (int k = 0; k < g.total(); ++k) a[k] = {std::sin(6.283185307179586 * g.primal_center(k)), 0.0};
    const auto s = smoothness_detect(a, g, 1.0);
    for (int k = 1; k + 1 < g.total(); ++k) CHECK(s[k] == 1);
  }
  SUBCASE("a unit step flags the two adjacent cells") {
    std::vector<Vec2> a(g.total());
    for (int k = 0; k < g.total(); ++k) a[k] = {g.primal_center(k) > 0.5 ? 1.0 : 0.0, 0.0};
    const auto s = smoothness_detect(a, g, 1.0);
    int flagged = 0;
    for (int k = 1; k + 1 < g.total(); ++k)
      if (!s[k]) {
        ++flagged;
        CHECK(std::fabs(g.primal_center(k) - 0.5) < 2.1 * g.dx);
      }
    CHECK(flagged == 2);
  }
}

TEST_CASE("field-level limiting: smooth flags pass through, locality holds") {
  const Grid1D g = build_grid_1d(0.0, 1.0, 16);
  Field1D f = Field1D::zeros(g);
  unsigned s = 5u;
  const auto rnd = [&s]() {
    s = s * 1664525u + 1013904223u;
    return (s >> 8) * (1.0 / 16777216.0);
  };
  for (int k = 0; k < g.total(); ++k) {
    f.primal[k] = {2.0 + rnd(), rnd()};
    f.dual[k] = {2.0 + rnd(), rnd()};
  }
  auto pp = central_reconstruct(f.primal, g, GridSide::primal);
  auto pd = central_reconstruct(f.dual, g, GridSide::dual);
  LimiterConfig cfg;

  SUBCASE("all-smooth flags leave every polynomial untouched") {
    std::vector<std::uint8_t> all_smooth(g.total(), 1);
    auto lp = pp;
    auto ld = pd;
    hr_limit_field(lp, ld, all_smooth, all_smooth, g, cfg);
    for (int k = 0; k < g.total(); ++k)
      for (int c = 0; c < 2; ++c)
        for (int m = 0; m < 3; ++m) {
          CHECK(lp[k].c[c][m] == pp[k].c[c][m]);
          CHECK(ld[k].c[c][m] == pd[k].c[c][m]);
        }
  }

  SUBCASE("a single non-smooth cell changes only that cell") {
    std::vector<std::uint8_t> flags(g.total(), 1);
    const int target = g.begin() + 7;
    flags[target] = 0;
    auto lp = pp;
    auto ld = pd;
    hr_limit_field(lp, ld, flags, std::vector<std::uint8_t>(g.total(), 1), g, cfg);
    for (int k = 0; k < g.total(); ++k) {
      if (k == target) continue;
      for (int m = 0; m < 3; ++m) CHECK(lp[k].c[0][m] == pp[k].c[0][m]);
    }
    for (int k = 0; k < g.total(); ++k)
      for (int m = 0; m < 3; ++m) CHECK(ld[k].c[0][m] == pd[k].c[0][m]);
  }
}

TEST_CASE("flat lake polynomials are a fixed point regardless of flags") {
  const Grid1D g = build_grid_1d(0.0, 1.0, 16);
  Field1D f = Field1D::zeros(g);
  for (int k = 0; k < g.total(); ++k) {
    f.primal[k] = {10.0, 0.0};
    f.dual[k] = {10.0, 0.0};
  }
  auto pp = central_reconstruct(f.primal, g, GridSide::primal);
  auto pd = central_reconstruct(f.dual, g, GridSide::dual);
  auto lp = pp;
  auto ld = pd;
  LimiterConfig cfg;
  std::vector<std::uint8_t> none_smooth(g.total(), 0);
  hr_limit_field(lp, ld, none_smooth, none_smooth, g, cfg);
  for (int k = 2; k < g.total() - 2; ++k) {
    CHECK(lp[k].c[0][0] == 10.0);
    CHECK(lp[k].c[0][1] == 0.0);
    CHECK(lp[k].c[0][2] == 0.0);
    CHECK(lp[k].c[1][0] == 0.0);
    CHECK(ld[k].c[0][0] == 10.0);
  }
}

TEST_CASE("2-D limiting: global quadratic identity (plain) and conservation") {
  const Grid2D g = build_grid_2d(0.0, 1.0, 0.0, 1.0, 8, 8);
  const auto make_poly = [&](double xc, double yc) {
    // q(x,y) = 1 + 2x + y + 0.5x^2 + 0.25xy + 0.75y^2 about (xc, yc)
    TaylorPoly2D p;
    p.cx = xc;
    p.cy = yc;
    for (int c = 0; c < 3; ++c)
      p.c[c] = {1.0 + 2.0 * xc + yc + 0.5 * xc * xc + 0.25 * xc * yc + 0.75 * yc * yc,
                2.0 + xc + 0.25 * yc,
                1.0 + 0.25 * xc + 1.5 * yc,
                0.5,
                0.25,
                0.75};
    return p;
  };
  const double xc = 0.5, yc = 0.5, hx = 0.5 * g.dx, hy = 0.5 * g.dy;
  const TaylorPoly2D home = make_poly(xc, yc);
  const std::array<TaylorPoly2D, 4> nb = {make_poly(xc - hx, yc - hy), make_poly(xc + hx, yc - hy),
                                          make_poly(xc - hx, yc + hy), make_poly(xc + hx, yc + hy)};
  LimiterConfig plain;
  plain.remainder_correction = false;
  const TaylorPoly2D lim = hr_limit_cell(home, nb, g.dx, g.dy, plain);
  for (int m = 0; m < 6; ++m) CHECK(lim.c[0][m] == doctest::Approx(home.c[0][m]).epsilon(1e-10));

  // conservation with the correction on and rough neighbors
  LimiterConfig cfg;
  std::array<TaylorPoly2D, 4> rough = nb;
  rough[1].c[0][0] += 0.4;
  rough[2].c[0][1] -= 3.0;
  const TaylorPoly2D lim2 = hr_limit_cell(home, rough, g.dx, g.dy, cfg);
  const double before = home.average(0, xc - hx, xc + hx, yc - hy, yc + hy);
  const double after = lim2.average(0, xc - hx, xc + hx, yc - hy, yc + hy);
  CHECK(after == doctest::Approx(before).epsilon(1e-13));
}
