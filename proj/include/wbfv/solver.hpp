#pragma once
// Semi-discrete right-hand sides in 1D and 2D and the time loop.

#include "wbfv/boundary.hpp"
#include "wbfv/core/cell_field.hpp"
#include "wbfv/core/grid.hpp"
#include "wbfv/core/quadrature.hpp"
#include "wbfv/eos.hpp"
#include "wbfv/integrate.hpp"
#include "wbfv/physics.hpp"
#include "wbfv/reconstruct.hpp"
#include "wbfv/wellbalance.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <vector>

namespace wbfv {

struct SchemeConfig {
  SchemeKind kind = SchemeKind::Standard;
  int order = 3;
  FluxOptions flux;
  int quad_points = 0;  // 0 selects default_quadrature_points(order)
  double eps_factor = 1.0;
  double newton_tol = 1e-13;
  int newton_max_iter = 50;

  int quadrature() const { return quad_points > 0 ? quad_points : default_quadrature_points(order); }
  int ghosts() const { return required_ghosts(kind, order); }
};

struct SolverStats {
  long rhs_calls = 0;
  long fallbacks = 0;
};

class Solver1D {
 public:
  using Field = CellField1;
  using Gravity = std::function<double(double)>;

  Solver1D(const Grid1D& grid, const SchemeConfig& scheme, const EosModel& eos, Gravity gravity,
           const BoundarySpec1D& bc);

  const Grid1D& grid() const { return grid_; }
  const SchemeConfig& scheme() const { return scheme_; }
  const EosModel& eos() const { return eos_; }
  const BoundarySpec1D& boundaries() const { return bc_; }
  const SolverStats& stats() const { return stats_; }
  const GaussRule& rule() const { return rule_; }
  const Cweno1D& cweno() const { return cweno_; }

  /// Interpolated gravity of cell i.
  const Poly1d& gravity_interp(int i) const { return g_int_[grid_.storage(i)]; }
  double gravity(double x) const { return gravity_(x); }

  /// Frozen ghost values for Dirichlet sides.
  void set_boundary_data(const Field& q) { frozen_ = q; }

  void fill_ghosts(Field& q);
  /// Time derivative of the interior cell averages; ghost entries of `out` are zero.
  void rhs(Field& q, Field& out);
  double cfl_dt(const Field& q, double cfl) const;
  /// Throws StepError if an interior cell has non-positive density or internal energy.
  void check_state(const Field& q) const;

  /// Standard reconstruction of component c in cell i (ghosts must be filled).
  Poly1d standard_reconstruction(const Field& q, int comp, int i) const;
  /// Full reconstruction of cell i as used by rhs (ghosts must be filled).
  HydroRec1D reconstruct_cell(const Field& q, int i);

  /// Ghost energies for a hydrostatic side, shared with the discrete
  /// equilibrium initializer. Densities and momenta of the ghosts must be set.
  void hydrostatic_ghost_energies(Field& q, int side);
  /// Ghost densities and momenta extrapolated from the first cell whose
  /// stencil is interior.
  void extrapolate_ghost_densities(Field& q, int side) const;

 private:
  void compute_standard(const Field& q, int lo, int hi, bool energy);
  HydroRec1D reconstruct_wb(const Field& q, int i);
  LocalSource1D local_source(int i) const;
  double anchor(const LocalSource1D& s, double eps_hat, double rho_hat, int i, const Poly1d* e_std) const;
  void fill_side(Field& q, int side);

  Grid1D grid_;
  SchemeConfig scheme_;
  EosModel eos_;
  Gravity gravity_;
  BoundarySpec1D bc_;
  Cweno1D cweno_;
  GaussRule rule_;
  int r_;
  std::vector<Poly1d> g_int_;
  std::optional<Field> frozen_;
  SolverStats stats_;

  std::vector<Poly1d> rho_rec_, mom_rec_, ene_rec_;
  std::vector<State1> face_l_, face_r_, src_, flux_;
};

class Solver2D {
 public:
  using Field = CellField2;
  using Gravity = std::function<Eigen::Vector2d(double, double)>;

  Solver2D(const Grid2D& grid, const SchemeConfig& scheme, const EosModel& eos, Gravity gravity,
           const BoundarySpec2D& bc);

  const Grid2D& grid() const { return grid_; }
  const SchemeConfig& scheme() const { return scheme_; }
  const EosModel& eos() const { return eos_; }
  const SolverStats& stats() const { return stats_; }

  void set_boundary_data(const Field& q) { frozen_ = q; }
  /// Background cell averages (rho, 0, 0, eps) for background-deviation sides.
  void set_background(const Field& bg) { background_ = bg; }

  void fill_ghosts(Field& q);
  void rhs(Field& q, Field& out);
  double cfl_dt(const Field& q, double cfl) const;
  void check_state(const Field& q) const;

  Poly2d standard_reconstruction(const Field& q, int comp, int i, int j) const;
  HydroRec2D reconstruct_cell(const Field& q, int i, int j);
  const std::pair<Poly2d, Poly2d>& gravity_interp(int i, int j) const { return g_int_[grid_.storage(i, j)]; }

 private:
  void fill_x_side(Field& q, int side, BoundaryKind kind);
  void fill_y_side(Field& q, int side, BoundaryKind kind);

  Grid2D grid_;
  SchemeConfig scheme_;
  EosModel eos_;
  Gravity gravity_;
  BoundarySpec2D bc_;
  Cweno2D cweno_;
  GaussRule rule_;
  int nq_;
  std::array<double, 3> face_nodes_{}, face_weights_{};
  std::vector<std::pair<Poly2d, Poly2d>> g_int_;
  std::optional<Field> frozen_, background_;
  SolverStats stats_;

  // Per cell: states at the face nodes, [west, east, south, north] x nq.
  std::vector<State2> faces_;
  std::vector<State2> src_;
};

struct AdvanceOptions {
  double t_end = 0.0;
  double cfl = 0.5;
  long max_steps = 10000000;
  double damping = 0.0;
  /// Called after every accepted step; return false to stop early.
  std::function<bool(double, long)> observer;
};

struct AdvanceResult {
  double t = 0.0;
  long steps = 0;
  double seconds = 0.0;
  bool stopped_early = false;
};

template <class Solver>
AdvanceResult advance(Solver& solver, typename Solver::Field& q, const ButcherTableau& tab,
                      const AdvanceOptions& opt) {
  StepController{opt.cfl, opt.t_end, opt.max_steps}.validate();
  std::vector<typename Solver::Field> work;
  auto rhs = [&](typename Solver::Field& stage, typename Solver::Field& out) { solver.rhs(stage, out); };
  AdvanceResult res;
  const auto start = std::chrono::steady_clock::now();
  while (res.t < opt.t_end) {
    if (res.steps >= opt.max_steps) throw StepError("maximum number of steps reached");
    solver.fill_ghosts(q);
    double dt = solver.cfl_dt(q, opt.cfl);
    if (!(dt > 0.0)) throw StepError("non-positive time step");
    if (res.t + dt >= opt.t_end * (1.0 - 1e-14)) dt = opt.t_end - res.t;
    rk_step(q, tab, dt, rhs, work);
    damp_momentum(q, opt.damping, dt);
    solver.check_state(q);
    res.t = (res.t + dt >= opt.t_end * (1.0 - 1e-14)) ? opt.t_end : res.t + dt;
    ++res.steps;
    if (opt.observer && !opt.observer(res.t, res.steps)) {
      res.stopped_early = true;
      break;
    }
  }
  solver.fill_ghosts(q);
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace wbfv
