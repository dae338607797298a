#pragma once

#include <string>
#include <vector>

#include "swe/grid.hpp"

namespace swe {

// Normalized norms: l1 is sum(|diff| * cell measure) / |domain|, linf the
// plain max, so a uniform offset c gives l1 = linf = |c|.
struct ErrorReport {
  int n_components = 0;
  int grid_size = 0;
  std::array<double, 3> l1{};
  std::array<double, 3> linf{};
};

ErrorReport error_norms(const Field1D& a, const Field1D& b, const Grid1D& g);
ErrorReport error_norms(const Field2D& a, const Field2D& b, const Grid2D& g);

// Interior primal averages of the fine field agglomerated onto a coarser grid
// (factor must divide the fine cell count); exact averaging, no interpolation.
std::vector<Vec2> restrict_primal(const Field1D& fine, const Grid1D& fine_grid, int factor);
std::vector<Vec3> restrict_primal(const Field2D& fine, const Grid2D& fine_grid, int factor);

ErrorReport norms_of_diff(const std::vector<Vec2>& a, const std::vector<Vec2>& b, double cell_measure,
                          double domain_measure);
ErrorReport norms_of_diff(const std::vector<Vec3>& a, const std::vector<Vec3>& b, double cell_measure,
                          double domain_measure);

// Experimental order from three solutions on grids refining by 2:
// r = log2(||u_mid - u_coarse|| / ||u_fine - u_mid||), each difference taken
// after exact agglomeration onto the coarser grid of the pair. A vanishing
// denominator yields NaN (undefined order).
struct OrderEstimate {
  std::array<double, 3> l1{};
  std::array<double, 3> linf{};
  int n_components = 0;
};

OrderEstimate aitken_order(const Field1D& coarse, const Grid1D& gc, const Field1D& mid, const Grid1D& gm,
                           const Field1D& fine, const Grid1D& gf);

// L-inf of the per-cell change between consecutive snapshots divided by dt.
double steady_state_residual(const Field1D& prev, const Field1D& next, double dt);

// Rows of a convergence table as printed by the report writer.
struct OrderTableRow {
  std::string label;  // e.g. "1/800"
  std::vector<double> values;
};

struct OrderTable {
  std::vector<std::string> columns;
  std::vector<OrderTableRow> rows;
};

}  // namespace swe
