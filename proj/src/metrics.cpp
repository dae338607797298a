#include "swe/metrics.hpp"

#include <cmath>

#include "swe/errors.hpp"

namespace swe {

namespace {

template <std::size_t NC>
ErrorReport norms_impl(const std::vector<std::array<double, NC>>& a,
                       const std::vector<std::array<double, NC>>& b, double cell_measure,
                       double domain_measure) {
  if (a.size() != b.size()) throw ConfigError("error_norms: size mismatch");
  ErrorReport r;
  r.n_components = NC;
  r.grid_size = static_cast<int>(a.size());
  for (std::size_t k = 0; k < a.size(); ++k)
    for (std::size_t c = 0; c < NC; ++c) {
      const double d = std::fabs(a[k][c] - b[k][c]);
      r.l1[c] += d;
      r.linf[c] = std::max(r.linf[c], d);
    }
  for (std::size_t c = 0; c < NC; ++c) r.l1[c] *= cell_measure / domain_measure;
  return r;
}

template <std::size_t NC>
std::vector<std::array<double, NC>> interior_1d(const std::vector<std::array<double, NC>>& a,
                                                const Grid1D& g) {
  return {a.begin() + g.begin(), a.begin() + g.end()};
}

}  // namespace

ErrorReport norms_of_diff(const std::vector<Vec2>& a, const std::vector<Vec2>& b, double cell_measure,
                          double domain_measure) {
  return norms_impl<2>(a, b, cell_measure, domain_measure);
}

ErrorReport norms_of_diff(const std::vector<Vec3>& a, const std::vector<Vec3>& b, double cell_measure,
                          double domain_measure) {
  return norms_impl<3>(a, b, cell_measure, domain_measure);
}

ErrorReport error_norms(const Field1D& a, const Field1D& b, const Grid1D& g) {
  if (a.primal.size() != b.primal.size()) throw ConfigError("error_norms: grid mismatch");
  return norms_impl<2>(interior_1d(a.primal, g), interior_1d(b.primal, g), g.dx, g.length());
}

ErrorReport error_norms(const Field2D& a, const Field2D& b, const Grid2D& g) {
  if (a.primal.size() != b.primal.size()) throw ConfigError("error_norms: grid mismatch");
  std::vector<Vec3> ia, ib;
  ia.reserve(static_cast<std::size_t>(g.nx) * g.ny);
  ib.reserve(ia.capacity());
  for (int j = g.begin_y(); j < g.end_y(); ++j)
    for (int i = g.begin_x(); i < g.end_x(); ++i) {
      ia.push_back(a.primal[g.index(i, j)]);
      ib.push_back(b.primal[g.index(i, j)]);
    }
  return norms_impl<3>(ia, ib, g.dx * g.dy, g.area());
}

std::vector<Vec2> restrict_primal(const Field1D& fine, const Grid1D& fg, int factor) {
  if (factor < 1 || fg.n_cells % factor != 0) throw ConfigError("restrict_primal: factor must divide n_cells");
  const int nc = fg.n_cells / factor;
  std::vector<Vec2> out(nc, Vec2{0.0, 0.0});
  for (int i = 0; i < nc; ++i) {
    for (int s = 0; s < factor; ++s) out[i] += fine.primal[fg.begin() + i * factor + s];
    for (int c = 0; c < 2; ++c) out[i][c] /= factor;
  }
  return out;
}

std::vector<Vec3> restrict_primal(const Field2D& fine, const Grid2D& fg, int factor) {
  if (factor < 1 || fg.nx % factor != 0 || fg.ny % factor != 0)
    throw ConfigError("restrict_primal: factor must divide both cell counts");
  const int nx = fg.nx / factor, ny = fg.ny / factor;
  std::vector<Vec3> out(static_cast<std::size_t>(nx) * ny, Vec3{0.0, 0.0, 0.0});
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) {
      Vec3& acc = out[j * nx + i];
      for (int sj = 0; sj < factor; ++sj)
        for (int si = 0; si < factor; ++si)
          acc += fine.primal[fg.index(fg.begin_x() + i * factor + si, fg.begin_y() + j * factor + sj)];
      for (int c = 0; c < 3; ++c) acc[c] /= factor * factor;
    }
  return out;
}

OrderEstimate aitken_order(const Field1D& coarse, const Grid1D& gc, const Field1D& mid, const Grid1D& gm,
                           const Field1D& fine, const Grid1D& gf) {
  if (gm.n_cells != 2 * gc.n_cells || gf.n_cells != 2 * gm.n_cells)
    throw ConfigError("aitken_order: grids must refine by factor 2");
  const ErrorReport d1 =
      norms_of_diff(restrict_primal(mid, gm, 2), interior_1d(coarse.primal, gc), gc.dx, gc.length());
  const ErrorReport d2 =
      norms_of_diff(restrict_primal(fine, gf, 2), interior_1d(mid.primal, gm), gm.dx, gm.length());
  OrderEstimate r;
  r.n_components = 2;
  for (int c = 0; c < 2; ++c) {
    r.l1[c] = d2.l1[c] > 0.0 ? std::log2(d1.l1[c] / d2.l1[c]) : std::nan("");
    r.linf[c] = d2.linf[c] > 0.0 ? std::log2(d1.linf[c] / d2.linf[c]) : std::nan("");
  }
  return r;
}

double steady_state_residual(const Field1D& prev, const Field1D& next, double dt) {
  double m = 0.0;
  for (std::size_t k = 0; k < prev.primal.size(); ++k)
    for (int c = 0; c < 2; ++c) {
      m = std::max(m, std::fabs(next.primal[k][c] - prev.primal[k][c]));
      m = std::max(m, std::fabs(next.dual[k][c] - prev.dual[k][c]));
    }
  return m / dt;
}

}  // namespace swe
