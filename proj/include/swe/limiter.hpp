#pragma once

#include <cstdint>
#include <vector>

#include "swe/grid.hpp"
#include "swe/poly.hpp"
#include "swe/reconstruct.hpp"

namespace swe {

enum class LimiterKind { hr, none };

struct LimiterConfig {
  LimiterKind kind = LimiterKind::hr;
  double detector_threshold = 1.0;   // C_s; a cell is smooth iff |second difference| <= C_s*dx*(1+|avg|)
  bool remainder_correction = true;  // off reproduces the plain hierarchical limiting
};

// Bounded rational transform of the quadratic remainder alpha*delta^2:
// alpha*delta^2 / (1 + sqrt|alpha|*|delta| + |alpha|*delta^2). Magnitude stays
// below 1, the sign of alpha is kept, and the value agrees with the plain
// remainder to third order in delta.
double remainder_correct(double alpha, double delta);

double minmod(double a, double b);

// Slope of the non-oscillatory linear function on a cell of width dx built
// from its average and the two flanking point values at distance dx/2:
// minmod of the two one-sided slopes. The cell average is kept by
// construction since the linear part does not move it.
double minmod_linear(double avg_center, double point_left, double point_right, double dx);

// Hierarchical limiting of one degree-2 polynomial against the two flanking
// polynomials of the overlapping grid (their centers sit on this cell's
// edges). Runs the stage loop m = 2, 1: the quadratic coefficient is limited
// from the neighbors' first-derivative values, then the linear coefficient is
// limited with the (corrected) quadratic remainder subtracted from the
// candidate data, and finally the constant term is restored so the home-cell
// average is unchanged. Remainder averages use 3-point Gauss.
TaylorPoly1D hr_limit_cell(const TaylorPoly1D& cell, const TaylorPoly1D& left, const TaylorPoly1D& right,
                           double dx, const LimiterConfig& cfg);

// 2-D variant against the four corner neighbors of the overlapping grid,
// ordered (-x,-y), (+x,-y), (-x,+y), (+x,+y). Gradients of the two
// first-derivative polynomials are limited per direction; the two estimates
// of the cross coefficient are combined by minmod. At the final stage the
// pure quadratic remainders are corrected per direction and the cross term is
// split evenly between the two directions with alpha replaced by the cross
// coefficient.
TaylorPoly2D hr_limit_cell(const TaylorPoly2D& cell, const std::array<TaylorPoly2D, 4>& corners,
                           double dx, double dy, const LimiterConfig& cfg);

// Low cost smoothness detector on the cell-average sequence: flag a cell
// smooth iff the centered second difference of every component stays under
// C_s*dx*(1+|avg|) (both directions in 2-D). Valid on storage indices with a
// full neighbor pair; the outermost entries are left non-smooth-capable and
// reported smooth.
std::vector<std::uint8_t> smoothness_detect(const std::vector<Vec2>& avgs, const Grid1D& g, double threshold);
std::vector<std::uint8_t> smoothness_detect(const std::vector<Vec3>& avgs, const Grid2D& g, double threshold);

// Apply hr_limit_cell to every non-smooth cell of each grid, with the other
// grid's pre-limit polynomials as flanking data; smooth cells pass through.
void hr_limit_field(std::vector<TaylorPoly1D>& primal, std::vector<TaylorPoly1D>& dual,
                    const std::vector<std::uint8_t>& smooth_primal,
                    const std::vector<std::uint8_t>& smooth_dual, const Grid1D& g, const LimiterConfig& cfg);
void hr_limit_field(std::vector<TaylorPoly2D>& primal, std::vector<TaylorPoly2D>& dual,
                    const std::vector<std::uint8_t>& smooth_primal,
                    const std::vector<std::uint8_t>& smooth_dual, const Grid2D& g, const LimiterConfig& cfg);

}  // namespace swe
