#pragma once
// Test scenarios: backgrounds, gravity fields and initial data.

#include "wbfv/boundary.hpp"
#include "wbfv/core/cell_field.hpp"
#include "wbfv/core/grid.hpp"
#include "wbfv/eos.hpp"

#include <Eigen/Core>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace wbfv {

class Solver1D;

struct PointState {
  double rho = 0.0, u = 0.0, v = 0.0, p = 0.0;
};

struct Scenario1D {
  std::string name;
  double x_min = 0.0, x_max = 1.0;
  EosModel eos = EosModel::ideal(1.4);
  BoundarySpec1D bc;
  double t_end = 0.0;
  int n_default = 128;
  double damping = 0.0;
  std::function<double(double)> potential;
  std::function<double(double)> gravity;
  std::function<PointState(double)> initial;
  /// Hydrostatic background; empty when none is known in closed form.
  std::function<PointState(double)> background;

  Grid1D make_grid(int n, int n_ghost) const { return Grid1D(x_min, x_max, n, n_ghost); }
};

struct Scenario2D {
  std::string name;
  double x_min = 0.0, x_max = 1.0, y_min = 0.0, y_max = 1.0;
  EosModel eos = EosModel::ideal(1.4);
  BoundarySpec2D bc;
  double t_end = 0.0;
  int n_default = 64;
  std::function<double(double, double)> potential;
  std::function<Eigen::Vector2d(double, double)> gravity;
  std::function<PointState(double, double)> initial;
  std::function<PointState(double, double)> background;
  /// State subtracted before extrapolation on background-deviation sides.
  std::function<PointState(double, double)> far_field;

  Grid2D make_grid(int n, int n_ghost) const { return Grid2D(x_min, x_max, y_min, y_max, n, n, n_ghost); }
};

/// sin(z)/z and (z cos z - sin z)/z^3, both continued smoothly through 0.
double sinc(double z);
double sinc_derivative_over_z(double z);

enum class IsothermalPotential { Linear, Periodic };

Scenario1D isothermal_1d(IsothermalPotential phi);
Scenario1D isothermal_perturbed_1d(double eta);
/// eta > 0 selects the perturbed variant.
Scenario1D polytropic_radiation_1d(double eta = 0.0);
/// phi(x) = slope * x.
Scenario1D riemann_on_equilibrium_1d(double slope = 10.0);
Scenario1D relaxation_1d(double delta = 0.2, double t_end = 250.0);
Scenario2D polytrope_2d(double amplitude = 0.0);
Scenario2D radial_rayleigh_taylor_2d();

/// Integral of 1/c over the domain for the background.
double sound_crossing_time(const Scenario1D& sc, int intervals = 2000);

/// Conserved cell averages (ghosts included) by Gauss quadrature.
CellField1 init_cell_averages(const Grid1D& grid, const EosModel& eos, const std::function<PointState(double)>& f,
                              int points = 5);
CellField2 init_cell_averages(const Grid2D& grid, const EosModel& eos,
                              const std::function<PointState(double, double)>& f, int points = 5);
inline CellField1 init_cell_averages(const Scenario1D& sc, const Grid1D& grid, int points = 5) {
  return init_cell_averages(grid, sc.eos, sc.initial, points);
}
inline CellField2 init_cell_averages(const Scenario2D& sc, const Grid2D& grid, int points = 5) {
  return init_cell_averages(grid, sc.eos, sc.initial, points);
}

struct DiscreteEquilibrium {
  CellField1 field;
  /// Equilibrium pressure at the cell centres, ghosts included.
  std::vector<double> center_pressure;
};

/// Cell averages that the piecewise scheme of `solver` keeps at rest to
/// round-off: densities from the background, energies from the glued
/// equilibrium pressure anchored at p(x_anchor) in cell `anchor_cell`.
DiscreteEquilibrium discrete_equilibrium_init(const Scenario1D& sc, Solver1D& solver, int anchor_cell = 0);

/// Scenario parameters by name; unknown keys are rejected.
using ScenarioParams = std::map<std::string, double>;

bool is_scenario_2d(const std::string& name);
std::vector<std::string> scenario_names();
Scenario1D scenario_1d(const std::string& name, const ScenarioParams& params = {});
Scenario2D scenario_2d(const std::string& name, const ScenarioParams& params = {});

}  // namespace wbfv
