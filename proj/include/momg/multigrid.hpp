#pragma once

#include <string>
#include <vector>

#include "momg/single_level.hpp"

namespace momg {

/// Smallest cell count per direction allowed on the coarsest grid.
inline constexpr int min_coarse_cells = 8;

/// Nested rectangular grids, coarsest first; every coarse cell is the union
/// of a 2x2 block of cells of the next finer grid.
struct GridHierarchy {
  std::vector<Grid2D> grids;

  int finest_level() const { return static_cast<int>(grids.size()) - 1; }

  /// Builds the hierarchy under `finest`. levels = total number of grids;
  /// levels = 0 selects the deepest hierarchy whose coarsest grid keeps at
  /// least 8 cells per direction (a finer-than-8 finest grid stays single
  /// level). Explicit level counts that would need an odd split or a
  /// coarsest grid below 8 cells (when the finest allows 8) are rejected.
  static GridHierarchy build(const Grid2D& finest, int levels = 0);
};

/// Cycle shape: s1 pre-smoothing and s2 post-smoothing sweeps per level,
/// s3 sweeps as the coarsest-grid solver, gamma recursive calls (1 = V).
struct CyclePolicy {
  int s1 = 2;
  int s2 = 2;
  int s3 = 4;
  int gamma = 1;
};

/// Conservative restriction: per coarse cell the density, momentum, and
/// energy of the four children fix (rho_H, u_H, theta_H); children are
/// projected into that basis and area-averaged. The result is
/// Grad-normalized by construction.
CellField restrict_solution(const CellField& fine, const Grid2D& coarse);

/// Area-weighted average of the four children's arrays, each projected into
/// the corresponding coarse cell's basis.
std::vector<MomentRep<double>> restrict_residual(
    const std::vector<MomentRep<double>>& fine_arrays, const CellField& fine,
    const CellField& coarse);

/// Identity-prolongation FAS correction: every fine cell receives the
/// difference (coarse_after - coarse_before) of its parent, projected into
/// the fine cell basis, and is re-normalized.
void fas_correct(CellField& fine, const CellField& coarse_before,
                 const CellField& coarse_after);

/// One FAS cycle for R(f) = r on hierarchy level `level` (0 = coarsest):
/// coarsest level runs s3 sweeps; others pre-smooth, restrict solution and
/// defect, recurse gamma times on the coarse problem, correct, post-smooth.
void nmg_cycle(const GridHierarchy& hierarchy, int level, CellField& field,
               const RhsField& rhs, const SolveContext& ctx,
               const CyclePolicy& policy, WorkStats* work = nullptr);

/// Weighted L2 residual norm:
///   ||R||^2 = (1/(Lx Ly)) sum_ij ||R_ij||^2 ds_ij,
///   ||R_ij||^2 = sum_alpha alpha! theta_ij^|alpha| R_alpha^2.
/// Only the ratio of two such norms enters any stopping decision, so the
/// weight scaling is immaterial to termination.
double residual_norm(const std::vector<MomentRep<double>>& residuals,
                     const CellField& field);

struct HistoryEntry {
  int iteration;
  double rel_residual;
  double seconds;
};

struct SolveReport {
  bool converged = false;
  int iterations = 0;
  double r0_norm = 0.0;
  double final_norm = 0.0;
  double final_ratio = 0.0;
  long long work = 0;  // fast-sweeping cell evaluations
  double seconds = 0.0;
  std::vector<HistoryEntry> history;
};

/// Thrown when solve_steady hits its iteration cap, diverges, or a step
/// fails; carries the partial report (history included).
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, SolveReport report)
      : Error(what), report_(std::move(report)) {}
  const SolveReport& report() const { return report_; }

 private:
  SolveReport report_;
};

enum class SolverKind { euler, fs, nmg };

struct SolverOptions {
  SolverKind kind = SolverKind::nmg;
  double tol = 1e-8;
  int max_iterations = 0;  // 0: 200 for nmg, 100000 for fs/euler
  int levels = 0;          // nmg hierarchy depth; 0 = auto
  CyclePolicy cycle;
};

/// Drives the chosen outer iteration until ||R(f^n)|| / ||R(f^0)|| <= tol,
/// re-fixing the total mass after every iteration. A start whose absolute
/// residual is negligible against the field's own flux/collision scale is
/// reported converged with 0 iterations and ratio 0. Divergence (ratio
/// above 1e6 or non-finite) and step failures raise NonConvergence with the
/// partial history attached.
SolveReport solve_steady(CellField& field, const SolveContext& ctx,
                         const SolverOptions& options);

}  // namespace momg
