#pragma once

#include <array>
#include <vector>

#include "momg/spatial.hpp"

namespace momg {

/// Local-time-step policy: dt_ij = cfl / [ (|u1|+C sqrt(theta))/dx
///                                       + (|u2|+C sqrt(theta))/dy ]
/// with C the signal bound of the moment system (SpatialScheme::c_bound).
struct CflPolicy {
  double cfl = 0.9;
  double c_bound = 1.0;
};

double local_dt(const Vec3<double>& u, double theta, double dx, double dy,
                const CflPolicy& policy);
double local_dt(const MomentRep<double>& cell, double dx, double dy,
                const CflPolicy& policy);

/// Minimum of local_dt over all cells.
double global_dt(const CellField& field, const CflPolicy& policy);

/// Everything a smoothing iteration needs besides the field itself.
struct SolveContext {
  Walls walls;
  CollisionModel model;
  GasParams gas;
  SpatialScheme scheme;
  CflPolicy cfl;
  int threads = 1;
};

/// Smoothing-cost instrumentation: one unit = one per-cell residual
/// evaluation inside a sweep (four per cell per fast-sweeping call).
struct WorkStats {
  long long cell_evals = 0;
};

/// Per-cell right-hand sides for the level equation R(f) = r; empty means
/// r = 0. Each entry carries its own basis and is projected into the cell's
/// current basis when applied.
using RhsField = std::vector<MomentRep<double>>;

/// Forward Euler step toward R(f) = r: f <- f + dt*(R(f_old) - r) per cell
/// with the single global dt, then re-normalization of every cell.
/// `residuals` must be residual(field, ...) evaluated on the incoming field.
/// A cell whose update leaves the physical region is retried once with
/// dt/2; a second failure throws SolverError naming the cell.
void euler_step(CellField& field, const std::vector<MomentRep<double>>& residuals,
                const RhsField& rhs, const SolveContext& ctx);

/// One fast-sweeping Gauss-Seidel iteration: four alternating-direction
/// sweeps (outer i, inner j): (i+,j+), (i-,j+), (i-,j-), (i+,j-). Each cell
/// update uses its own local dt from the current cell state and the newest
/// neighbor values, and re-normalizes immediately. `sweep_order` permutes
/// the four directions (testing hook; the default is the canonical order).
/// With threads > 1 the outer loop is split into contiguous blocks swept
/// concurrently; block-boundary reads may see either neighbor version, so
/// results differ from serial FS but converge to the same steady state.
void fast_sweep_step(CellField& field, const RhsField& rhs, const SolveContext& ctx,
                     WorkStats* work = nullptr,
                     const std::array<int, 4>& sweep_order = {0, 1, 2, 3});

/// Total mass of the field: sum of rho_ij * area_ij.
double total_mass(const CellField& field);

/// Rescales every coefficient of every cell by target/current total mass.
/// Velocities and temperatures are untouched (the basis params define them
/// and the Grad constraints are homogeneous in the coefficients).
void mass_correction(CellField& field, double target_mass);

}  // namespace momg
