#pragma once

#include <vector>

#include "momg/collision.hpp"
#include "momg/flux.hpp"
#include "momg/grid.hpp"

namespace momg {

/// Spatial discretization settings: reconstruction order and the
/// characteristic-speed bound C entering flux selection (the largest root of
/// the Hermite polynomial one degree above the moment order).
struct SpatialScheme {
  int order = 1;
  double c_bound = 1.0;

  static SpatialScheme for_moment_order(int moment_order, int space_order);
};

/// Reconstructed state of cell (i, j) at its face in direction `axis`
/// (high_side true for the +axis face). Order 1 returns the cell value.
/// Order 2 applies central-difference slopes to basis params and
/// coefficients; cells adjacent to a wall use zero slope in the wall-normal
/// direction. Throws NonphysicalReconstruction when the reconstructed
/// temperature is nonpositive.
MomentRep<double> face_state(const CellField& field, int i, int j, int axis,
                             bool high_side, const SpatialScheme& scheme);

/// Pair of face states at one interior face.
struct InterfaceStates {
  MomentRep<double> left, right;
};

/// All interior interface states. x_faces[j * (nx-1) + i] sits between cells
/// (i, j) and (i+1, j); y_faces[j * nx + i] between (i, j) and (i, j+1).
/// Nonphysical reconstructions fall back to the first-order value.
struct ReconstructionResult {
  std::vector<InterfaceStates> x_faces, y_faces;
};
ReconstructionResult reconstruct(const CellField& field, const SpatialScheme& scheme);

/// Steady residual of one cell in its own basis:
///   R_ij = -[(F_{i+1/2} - F_{i-1/2})/dx + (F_{i,j+1/2} - F_{i,j-1/2})/dy] + Q(f_ij)
/// with wall closures on boundary faces. Face reconstructions that fail the
/// positivity check fall back to first order at that face.
MomentRep<double> cell_residual(const CellField& field, int i, int j,
                                const Walls& walls, const CollisionModel& model,
                                const GasParams& gas, const SpatialScheme& scheme);

/// Residual of every cell, parallel over cells with deterministic output.
std::vector<MomentRep<double>> residual(const CellField& field, const Walls& walls,
                                        const CollisionModel& model,
                                        const GasParams& gas,
                                        const SpatialScheme& scheme,
                                        int threads = 1);

}  // namespace momg
