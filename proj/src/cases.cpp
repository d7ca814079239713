#include "wbfv/cases.hpp"

#include "wbfv/core/quadrature.hpp"
#include "wbfv/physics.hpp"
#include "wbfv/solver.hpp"

#include <cmath>
#include <numbers>
#include <set>

namespace wbfv {
namespace {

constexpr double kPi = std::numbers::pi;

PointState at_rest(double rho, double p) { return {rho, 0.0, 0.0, p}; }

double bump(double x, double center, double width) {
  const double d = x - center;
  return std::exp(-width * d * d);
}

}  // namespace

double sinc(double z) {
  if (std::abs(z) < 1e-3) {
    const double z2 = z * z;
    return 1.0 - z2 / 6.0 * (1.0 - z2 / 20.0 * (1.0 - z2 / 42.0));
  }
  return std::sin(z) / z;
}

double sinc_derivative_over_z(double z) {
  if (std::abs(z) < 1e-2) {
    const double z2 = z * z;
    return -1.0 / 3.0 + z2 / 30.0 - z2 * z2 / 840.0 + z2 * z2 * z2 / 45360.0;
  }
  return (z * std::cos(z) - std::sin(z)) / (z * z * z);
}

Scenario1D isothermal_1d(IsothermalPotential phi) {
  Scenario1D sc;
  const bool linear = phi == IsothermalPotential::Linear;
  sc.name = linear ? "isothermal-linear" : "isothermal-sin";
  sc.bc = BoundarySpec1D::both(linear ? BoundaryKind::Dirichlet : BoundaryKind::Periodic);
  if (linear) {
    sc.potential = [](double x) { return 10.0 * x; };
    sc.gravity = [](double) { return -10.0; };
  } else {
    sc.potential = [](double x) { return std::sin(2.0 * kPi * x); };
    sc.gravity = [](double x) { return -2.0 * kPi * std::cos(2.0 * kPi * x); };
  }
  auto pot = sc.potential;
  sc.background = [pot](double x) {
    const double e = std::exp(-pot(x));
    return at_rest(e, e);
  };
  sc.initial = sc.background;
  sc.t_end = 2.0 * std::sqrt(1.0 / sc.eos.gamma());
  return sc;
}

Scenario1D isothermal_perturbed_1d(double eta) {
  Scenario1D sc = isothermal_1d(IsothermalPotential::Periodic);
  sc.name = "isothermal-perturbed";
  sc.t_end = 0.5;
  auto bg = sc.background;
  sc.initial = [bg, eta](double x) {
    PointState s = bg(x);
    s.p += eta * bump(x, 0.5, 100.0);
    return s;
  };
  return sc;
}

Scenario1D polytropic_radiation_1d(double eta) {
  Scenario1D sc;
  sc.name = eta > 0.0 ? "polytropic-radiation-perturbed" : "polytropic-radiation";
  sc.eos = EosModel::radiation(1.4);
  sc.bc = BoundarySpec1D::both(BoundaryKind::Dirichlet);
  sc.t_end = eta > 0.0 ? 0.1 : 10.0;
  const double nu = sc.eos.gamma();
  sc.potential = [](double x) { return -x; };
  sc.gravity = [](double) { return 1.0; };
  sc.background = [nu](double x) {
    const double theta = 1.0 - (nu - 1.0) / nu * (-x);
    const double rho = std::pow(theta, 1.0 / (nu - 1.0));
    return at_rest(rho, std::pow(rho, nu));
  };
  auto bg = sc.background;
  sc.initial = [bg, eta](double x) {
    PointState s = bg(x);
    s.p += eta * bump(x, 0.3, 100.0);
    return s;
  };
  return sc;
}

Scenario1D riemann_on_equilibrium_1d(double slope) {
  Scenario1D sc;
  sc.name = "riemann";
  sc.x_max = 0.25;
  sc.bc = BoundarySpec1D::both(BoundaryKind::Dirichlet);
  sc.t_end = 0.02;
  sc.potential = [slope](double x) { return slope * x; };
  sc.gravity = [slope](double) { return -slope; };
  constexpr double x0 = 0.125, a = 0.5, b = 1.0, c = 2.0;
  sc.initial = [slope](double x) {
    const double phi = slope * x;
    if (x < x0) return at_rest(a * c * std::exp(-a * phi), c * std::exp(-a * phi));
    return at_rest(b * std::exp(-b * phi), std::exp(-b * phi));
  };
  return sc;
}

Scenario1D relaxation_1d(double delta, double t_end) {
  Scenario1D sc;
  sc.name = "relaxation";
  sc.bc = BoundarySpec1D::both(BoundaryKind::Periodic);
  sc.t_end = t_end;
  sc.damping = delta;
  sc.potential = [](double x) { return 10.0 * std::sin(2.0 * kPi * x); };
  sc.gravity = [](double x) { return -20.0 * kPi * std::cos(2.0 * kPi * x); };
  sc.initial = [](double) { return at_rest(1.0, 1.0); };
  return sc;
}

Scenario2D polytrope_2d(double amplitude) {
  Scenario2D sc;
  sc.name = amplitude != 0.0 ? "polytrope-perturbed" : "polytrope";
  sc.x_min = sc.y_min = -0.5;
  sc.x_max = sc.y_max = 0.5;
  sc.eos = EosModel::ideal(2.0);
  sc.bc = BoundarySpec2D::all(BoundaryKind::Dirichlet);
  sc.t_end = amplitude != 0.0 ? 0.2 : 5.0;
  const double k = std::sqrt(2.0 * kPi);
  sc.potential = [k](double x, double y) { return -2.0 * sinc(k * std::hypot(x, y)); };
  sc.gravity = [k](double x, double y) {
    const double f = 2.0 * k * k * sinc_derivative_over_z(k * std::hypot(x, y));
    return Eigen::Vector2d(f * x, f * y);
  };
  sc.background = [k](double x, double y) {
    const double rho = sinc(k * std::hypot(x, y));
    return at_rest(rho, rho * rho);
  };
  auto bg = sc.background;
  sc.initial = [bg, amplitude](double x, double y) {
    PointState s = bg(x, y);
    s.p *= 1.0 + amplitude * std::exp(-(x * x + y * y) / (0.05 * 0.05));
    return s;
  };
  return sc;
}

Scenario2D radial_rayleigh_taylor_2d() {
  Scenario2D sc;
  sc.name = "rayleigh-taylor";
  sc.x_min = sc.y_min = 0.0;
  sc.x_max = sc.y_max = 0.5;
  sc.bc = {BoundaryKind::Reflecting, BoundaryKind::BackgroundExtrapolation, BoundaryKind::Reflecting,
           BoundaryKind::BackgroundExtrapolation};
  sc.t_end = 0.6;
  const double k = std::sqrt(2.0 * kPi);
  sc.potential = [k](double x, double y) { return -20.0 * sinc(k * std::hypot(x, y)); };
  sc.gravity = [k](double x, double y) {
    const double f = 20.0 * k * k * sinc_derivative_over_z(k * std::hypot(x, y));
    return Eigen::Vector2d(f * x, f * y);
  };
  constexpr double r0 = 0.2, a = 1.0, b = 2.0;
  const double c = std::exp((a - b) * sc.potential(r0, 0.0));
  auto pot = sc.potential;
  sc.far_field = [pot](double x, double y) {
    const double e = std::exp(-b * pot(x, y));
    return at_rest(b * e, e);
  };
  sc.initial = [pot, c](double x, double y) {
    const double phi = pot(x, y);
    if (std::hypot(x, y) < r0) return at_rest(a * c * std::exp(-a * phi), c * std::exp(-a * phi));
    return at_rest(b * std::exp(-b * phi), std::exp(-b * phi));
  };
  sc.background = sc.initial;
  return sc;
}

double sound_crossing_time(const Scenario1D& sc, int intervals) {
  if (!sc.background) throw ConfigError("scenario '" + sc.name + "' has no background");
  const double h = (sc.x_max - sc.x_min) / intervals;
  const GaussRule rule(5);
  double tau = 0.0;
  for (int k = 0; k < intervals; ++k)
    tau += h * rule.average(
                   [&](double x) {
                     const PointState s = sc.background(x);
                     return 1.0 / sc.eos.sound_speed(s.rho, s.p);
                   },
                   sc.x_min + (k + 0.5) * h, h);
  return tau;
}

CellField1 init_cell_averages(const Grid1D& grid, const EosModel& eos, const std::function<PointState(double)>& f,
                              int points) {
  const GaussRule rule(points);
  CellField1 q(grid);
  for (int i = -grid.n_ghost(); i < grid.n_cells() + grid.n_ghost(); ++i) {
    State1 acc = State1::Zero();
    for (int a = 0; a < rule.size(); ++a) {
      const PointState s = f(grid.center(i) + rule.node(a) * grid.dx());
      acc += rule.weight(a) * from_primitive<1>(s.rho, s.u, 0.0, s.p, eos);
    }
    q.at(grid.storage(i)) = acc;
  }
  return q;
}

CellField2 init_cell_averages(const Grid2D& grid, const EosModel& eos,
                              const std::function<PointState(double, double)>& f, int points) {
  const GaussRule rule(points);
  CellField2 q(grid);
  const int ng = grid.n_ghost();
  for (int j = -ng; j < grid.ny() + ng; ++j)
    for (int i = -ng; i < grid.nx() + ng; ++i) {
      State2 acc = State2::Zero();
      for (int b = 0; b < rule.size(); ++b)
        for (int a = 0; a < rule.size(); ++a) {
          const PointState s = f(grid.xc(i) + rule.node(a) * grid.dx(), grid.yc(j) + rule.node(b) * grid.dy());
          acc += rule.weight(a) * rule.weight(b) * from_primitive<2>(s.rho, s.u, s.v, s.p, eos);
        }
      q.at(grid.storage(i, j)) = acc;
    }
  return q;
}

DiscreteEquilibrium discrete_equilibrium_init(const Scenario1D& sc, Solver1D& solver, int anchor_cell) {
  if (!sc.background) throw ConfigError("scenario '" + sc.name + "' has no background");
  const Grid1D& grid = solver.grid();
  const int n = grid.n_cells(), ng = grid.n_ghost(), r = solver.cweno().radius();
  if (anchor_cell < 0 || anchor_cell >= n) throw ConfigError("anchor cell outside the grid");
  const EosModel& eos = solver.eos();
  const GaussRule& rule = solver.rule();

  DiscreteEquilibrium out{init_cell_averages(grid, eos, sc.background), {}};
  CellField1& q = out.field;
  q.data().row(1).setZero();
  const auto& bc = solver.boundaries();
  if (bc.left == BoundaryKind::HydrostaticExtrapolation || bc.left == BoundaryKind::SolidWall)
    solver.extrapolate_ghost_densities(q, -1);
  if (bc.right == BoundaryKind::HydrostaticExtrapolation || bc.right == BoundaryKind::SolidWall)
    solver.extrapolate_ghost_densities(q, +1);

  // Cells with a complete stencil carry their own segment; the outermost
  // ghosts continue the last one.
  const int lo = -ng + r, hi = n + ng - 1 - r;
  std::vector<Poly1d> rho(grid.n_total()), anti(grid.n_total());
  for (int k = lo; k <= hi; ++k) {
    const int s = grid.storage(k);
    rho[s] = solver.standard_reconstruction(q, 0, k);
    anti[s] = (rho[s] * solver.gravity_interp(k)).antiderivative();
  }
  std::vector<double> offset(grid.n_total(), 0.0);
  offset[grid.storage(anchor_cell)] = sc.background(grid.center(anchor_cell)).p;
  for (int k = anchor_cell + 1; k <= hi; ++k) {
    const int s = grid.storage(k);
    const double face = grid.interface(k);
    offset[s] = offset[s - 1] + anti[s - 1](face) - anti[s](face);
  }
  for (int k = anchor_cell - 1; k >= lo; --k) {
    const int s = grid.storage(k);
    const double face = grid.interface(k + 1);
    offset[s] = offset[s + 1] + anti[s + 1](face) - anti[s](face);
  }

  out.center_pressure.assign(grid.n_total(), 0.0);
  for (int k = -ng; k < n + ng; ++k) {
    const int seg = grid.storage(std::clamp(k, lo, hi));
    const double xc = grid.center(k);
    double e = 0.0;
    for (int a = 0; a < rule.size(); ++a) {
      const double x = xc + rule.node(a) * grid.dx();
      const double p = offset[seg] + anti[seg](x);
      const double d = rho[seg](x);
      if (!(p > 0.0) || !(d > 0.0)) throw EquilibriumError("discrete equilibrium turned non-positive", k);
      e += rule.weight(a) * eos.internal_energy(d, p);
    }
    q.data()(2, grid.storage(k)) = e;
    out.center_pressure[grid.storage(k)] = offset[seg] + anti[seg](xc);
  }
  return out;
}

bool is_scenario_2d(const std::string& name) { return name == "polytrope" || name == "rayleigh-taylor"; }

std::vector<std::string> scenario_names() {
  return {"isothermal-linear", "isothermal-sin",  "isothermal-perturbed", "polytropic-radiation",
          "riemann",           "relaxation",      "polytrope",            "rayleigh-taylor"};
}

namespace {

double take(const ScenarioParams& p, const std::string& key, double fallback) {
  const auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

void check_keys(const std::string& name, const ScenarioParams& p, std::set<std::string> allowed) {
  allowed.insert("t_end");
  for (const auto& [key, value] : p)
    if (!allowed.count(key)) throw ConfigError("scenario '" + name + "' has no parameter '" + key + "'");
}

}  // namespace

Scenario1D scenario_1d(const std::string& name, const ScenarioParams& params) {
  Scenario1D sc;
  if (name == "isothermal-linear" || name == "isothermal-sin") {
    check_keys(name, params, {});
    sc = isothermal_1d(name == "isothermal-linear" ? IsothermalPotential::Linear : IsothermalPotential::Periodic);
  } else if (name == "isothermal-perturbed") {
    check_keys(name, params, {"eta"});
    sc = isothermal_perturbed_1d(take(params, "eta", 1e-1));
  } else if (name == "polytropic-radiation") {
    check_keys(name, params, {"eta"});
    sc = polytropic_radiation_1d(take(params, "eta", 0.0));
  } else if (name == "riemann") {
    check_keys(name, params, {"slope"});
    sc = riemann_on_equilibrium_1d(take(params, "slope", 10.0));
  } else if (name == "relaxation") {
    check_keys(name, params, {"delta"});
    sc = relaxation_1d(take(params, "delta", 0.2));
  } else {
    throw ConfigError("unknown 1D scenario '" + name + "'");
  }
  sc.t_end = take(params, "t_end", sc.t_end);
  return sc;
}

Scenario2D scenario_2d(const std::string& name, const ScenarioParams& params) {
  Scenario2D sc;
  if (name == "polytrope") {
    check_keys(name, params, {"amplitude"});
    sc = polytrope_2d(take(params, "amplitude", 0.0));
  } else if (name == "rayleigh-taylor") {
    check_keys(name, params, {});
    sc = radial_rayleigh_taylor_2d();
  } else {
    throw ConfigError("unknown 2D scenario '" + name + "'");
  }
  sc.t_end = take(params, "t_end", sc.t_end);
  return sc;
}

}  // namespace wbfv
