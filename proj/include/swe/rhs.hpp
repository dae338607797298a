#pragma once

#include <vector>

#include "swe/grid.hpp"
#include "swe/limiter.hpp"
#include "swe/model.hpp"

namespace swe {

// Rates of change of the cell averages on both grids (ghost entries zero).
struct Rhs1D {
  std::vector<Vec2> primal, dual;
};

struct Rhs2D {
  std::vector<Vec3> primal, dual;
};

// Totals of the w-equation over the primal interior, recorded during one
// right-hand-side evaluation. interior_sum is the applied mass rate;
// relax_exchange - boundary_outflow must reproduce it up to summation
// round-off, which is the discrete conservation statement.
struct MassAudit {
  double boundary_outflow = 0.0;  // f_w at the right domain edge minus the left (line sums in 2-D)
  double relax_exchange = 0.0;    // sum over cells of (staggered average - own average) * measure / dtau
  double interior_sum = 0.0;      // sum of rate * measure
};

struct RhsConfig {
  LimiterConfig limiter{};
  bool well_balanced = true;  // off: reconstruct (h, hu) and use the pointwise -g h B_x source (1-D only)
};

// Assembles the semi-discrete rates: each cell of one grid is updated from
// the limited reconstruction on the other grid -- staggered average
// relaxation, fluxes at the source-grid cell centers (edge line integrals in
// 2-D), and the balanced source integral. Bathymetry values at all quadrature
// and flux points are cached at construction since the bottom is static.
class RhsAssembler1D {
 public:
  RhsAssembler1D(const Grid1D& grid, Bathymetry1D bathy, const ModelParams& params, BoundarySpec1D bc,
                 RhsConfig cfg);

  // Ghosts of `field` are refreshed internally at time t; w_mean is supplied
  // by the caller so it can stay frozen across the stages of one step.
  Rhs1D operator()(const Field1D& field, double t, double dtau, double w_mean,
                   MassAudit* audit = nullptr) const;

  const Grid1D& grid() const { return grid_; }
  const Bathymetry1D& bathymetry() const { return bathy_; }
  const ModelParams& params() const { return params_; }
  const BoundarySpec1D& boundary() const { return bc_; }
  const RhsConfig& config() const { return cfg_; }

 private:
  Grid1D grid_;
  Bathymetry1D bathy_;
  ModelParams params_;
  BoundarySpec1D bc_;
  RhsConfig cfg_;

  std::vector<double> b_primal_center_, b_dual_center_;
  std::vector<double> bx_primal_center_, bx_dual_center_;
  // Per target cell: 2 halves x 3 Gauss points, split at the cell center
  // where both the overlapping reconstruction and the regularized bottom may
  // kink. Index ((k*2 + half)*3 + g).
  std::vector<double> qb_dual_, qbx_dual_;      // dual-grid targets
  std::vector<double> qb_primal_, qbx_primal_;  // primal-grid targets
  std::vector<double> bavg_primal_, bavg_dual_;  // per-cell bottom averages (h <-> w conversion)
};

class RhsAssembler2D {
 public:
  RhsAssembler2D(const Grid2D& grid, Bathymetry2D bathy, const ModelParams& params, BoundarySpec2D bc,
                 RhsConfig cfg);

  Rhs2D operator()(const Field2D& field, double t, double dtau, double w_mean,
                   MassAudit* audit = nullptr) const;

  const Grid2D& grid() const { return grid_; }
  const Bathymetry2D& bathymetry() const { return bathy_; }
  const ModelParams& params() const { return params_; }
  const BoundarySpec2D& boundary() const { return bc_; }
  const RhsConfig& config() const { return cfg_; }

 private:
  Grid2D grid_;
  Bathymetry2D bathy_;
  ModelParams params_;
  BoundarySpec2D bc_;
  RhsConfig cfg_;

  // Edge-flux quadrature: per edge 2 halves x 2 Gauss points.
  // x-edges keyed by (source column iv, target row j), y-edges by (i, jv).
  std::vector<double> bxe_dual_, bye_dual_, bxe_primal_, bye_primal_;
  // Source quadrature: per target cell 4 quarters x 3x3 Gauss points.
  std::vector<double> qsx_dual_, qsy_dual_, qsx_primal_, qsy_primal_;
};

// Convenience single-shot evaluation (builds the assembler internally and
// computes the global mean surface from the field).
Rhs1D compute_rhs(const Field1D& field, const Grid1D& grid, const Bathymetry1D& bathy,
                  const ModelParams& params, double dtau, const BoundarySpec1D& bc, double t,
                  const RhsConfig& cfg = {});
Rhs2D compute_rhs(const Field2D& field, const Grid2D& grid, const Bathymetry2D& bathy,
                  const ModelParams& params, double dtau, const BoundarySpec2D& bc, double t,
                  const RhsConfig& cfg = {});

}  // namespace swe
