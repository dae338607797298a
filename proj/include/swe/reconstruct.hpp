#pragma once

#include <vector>

#include "swe/grid.hpp"
#include "swe/poly.hpp"

namespace swe {

enum class GridSide { primal, dual };

// Unlimited central reconstruction: for every cell with a full stencil
// (storage indices [1, total-2] in each direction) build the degree-2 Taylor
// polynomial from cell averages. In 1-D this is the unique conservative
// quadratic matching the three averages {left, self, right}. In 2-D the six
// coefficients are fit to the 3x3 average stencil by least squares with the
// home-cell average imposed exactly, which keeps the scheme conservative.
// Entries outside the valid range are left value-initialized and must not be
// evaluated.
std::vector<TaylorPoly1D> central_reconstruct(const std::vector<Vec2>& avgs, const Grid1D& g, GridSide side);
std::vector<TaylorPoly2D> central_reconstruct(const std::vector<Vec3>& avgs, const Grid2D& g, GridSide side);

}  // namespace swe
