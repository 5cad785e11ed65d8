#pragma once

#include <vector>

#include "momg/moment_rep.hpp"

namespace momg {

/// Rectangular grid of nx * ny cells. Cell (i, j) spans
/// [xe[i], xe[i+1]] x [ye[j], ye[j+1]]; uniform construction is the common
/// case but per-cell sizes are kept so nonuniform grids work throughout.
struct Grid2D {
  int nx = 0, ny = 0;
  double Lx = 0, Ly = 0;
  std::vector<double> dx, dy;  // cell sizes, sizes nx and ny
  std::vector<double> xc, yc;  // cell centers

  static Grid2D uniform(int nx, int ny, double Lx, double Ly) {
    if (nx < 1 || ny < 1 || !(Lx > 0) || !(Ly > 0))
      throw ConfigError("Grid2D: cell counts and extents must be positive");
    Grid2D g;
    g.nx = nx;
    g.ny = ny;
    g.Lx = Lx;
    g.Ly = Ly;
    g.dx.assign(nx, Lx / nx);
    g.dy.assign(ny, Ly / ny);
    g.xc.resize(nx);
    g.yc.resize(ny);
    for (int i = 0; i < nx; ++i) g.xc[i] = (i + 0.5) * Lx / nx;
    for (int j = 0; j < ny; ++j) g.yc[j] = (j + 0.5) * Ly / ny;
    return g;
  }

  double area(int i, int j) const { return dx[i] * dy[j]; }
  int cells() const { return nx * ny; }
};

/// Diffuse wall data: signed tangential lid speed along the canonical
/// tangential axis (x for bottom/top walls, y for left/right walls) and the
/// wall temperature in theta units.
struct WallSpec {
  double speed = 0.0;
  double theta = 1.0;
};

struct Walls {
  WallSpec left, right, bottom, top;
};

/// Per-cell storage of moment representations, row-major with i fastest.
/// Used both for solution fields (cells Grad-normalized) and for per-cell
/// coefficient arrays such as residuals and right-hand sides.
class CellField {
 public:
  CellField() = default;
  CellField(const Grid2D& grid, int order)
      : grid_(grid), order_(order),
        cells_(static_cast<size_t>(grid.nx) * grid.ny,
               MomentRep<double>{order, {}, VecX<double>::Zero(IndexSet::count(order))}) {}

  const Grid2D& grid() const { return grid_; }
  int order() const { return order_; }
  int index(int i, int j) const { return j * grid_.nx + i; }

  MomentRep<double>& at(int i, int j) { return cells_[index(i, j)]; }
  const MomentRep<double>& at(int i, int j) const { return cells_[index(i, j)]; }
  MomentRep<double>& operator[](int k) { return cells_[k]; }
  const MomentRep<double>& operator[](int k) const { return cells_[k]; }
  int size() const { return static_cast<int>(cells_.size()); }

 private:
  Grid2D grid_;
  int order_ = 0;
  std::vector<MomentRep<double>> cells_;
};

/// Uniform-Maxwellian field, the initial condition of every benchmark.
inline CellField uniform_field(const Grid2D& grid, int order, double rho,
                               const Vec3<double>& u, double theta) {
  CellField field(grid, order);
  const MomentRep<double> rep = maxwellian_rep(rho, u, theta, order);
  for (int k = 0; k < field.size(); ++k) field[k] = rep;
  return field;
}

}  // namespace momg
