#pragma once

#include "wbfv/core/cell_field.hpp"
#include "wbfv/core/types.hpp"

#include <Eigen/Core>

#include <cmath>
#include <string>
#include <vector>

namespace wbfv {

/// Explicit Runge-Kutta tableau.
struct ButcherTableau {
  std::string name;
  int order = 0;
  Eigen::MatrixXd a;
  Eigen::VectorXd b;
  Eigen::VectorXd c;

  int stages() const { return static_cast<int>(b.size()); }

  static ButcherTableau forward_euler();
  /// Four-stage, third-order SSP scheme.
  static ButcherTableau ssprk43();
  /// Dormand-Prince fifth-order solution (six stages).
  static ButcherTableau rk5();
  /// Tableau matching a spatial order: 1 -> Euler, 3 -> SSPRK(4,3), 5 -> RK5.
  static ButcherTableau for_order(int order);
};

struct StepController {
  double cfl = 0.5;
  double t_end = 0.0;
  long max_steps = 10000000;

  void validate() const {
    if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("cfl number must lie in (0, 1]");
    if (!(t_end >= 0.0)) throw ConfigError("t_end must be non-negative");
  }
};

/// Generic explicit RK step on any Eigen-backed field. `rhs(stage, out)` may
/// modify the stage's ghost layer.
template <class Field, class Rhs>
void rk_step(Field& q, const ButcherTableau& tab, double dt, Rhs&& rhs, std::vector<Field>& work) {
  const int s = tab.stages();
  work.resize(s + 1);
  Field& stage = work[s];
  for (int i = 0; i < s; ++i) {
    stage = q;
    for (int j = 0; j < i; ++j)
      if (tab.a(i, j) != 0.0) stage.data() += (dt * tab.a(i, j)) * work[j].data();
    rhs(stage, work[i]);
  }
  for (int i = 0; i < s; ++i)
    if (tab.b[i] != 0.0) q.data() += (dt * tab.b[i]) * work[i].data();
}

/// Scalar-state overload used to verify temporal order.
template <class Rhs>
double rk_step_scalar(double y, double t, const ButcherTableau& tab, double dt, Rhs&& f) {
  const int s = tab.stages();
  std::vector<double> k(s);
  for (int i = 0; i < s; ++i) {
    double yi = y;
    for (int j = 0; j < i; ++j) yi += dt * tab.a(i, j) * k[j];
    k[i] = f(t + tab.c[i] * dt, yi);
  }
  for (int i = 0; i < s; ++i) y += dt * tab.b[i] * k[i];
  return y;
}

/// Exact solution of d(rho u)/dt = -delta rho u over dt; energy untouched.
template <typename T, int Dim>
void damp_momentum(CellFieldT<T, Dim>& q, double delta, double dt) {
  if (delta == 0.0) return;
  const double f = std::exp(-delta * dt);
  q.data().template middleRows<Dim>(1) *= f;
}

}  // namespace wbfv
