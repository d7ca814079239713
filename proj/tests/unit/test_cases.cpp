#include "wbfv/cases.hpp"
#include "wbfv/solver.hpp"

#include <doctest.h>

#include <cmath>

using namespace wbfv;

TEST_CASE("sinc helpers are smooth through zero") {
  CHECK(sinc(0.0) == 1.0);
  CHECK(sinc(1e-9) == doctest::Approx(1.0));
  CHECK(sinc(M_PI) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(sinc_derivative_over_z(0.0) == doctest::Approx(-1.0 / 3.0));
  for (double z : {5e-3, 1.5e-2, 0.7, 3.0}) {
    const double exact = (z * std::cos(z) - std::sin(z)) / (z * z * z);
    CHECK(sinc_derivative_over_z(z) == doctest::Approx(exact).epsilon(1e-9));
  }
}

TEST_CASE("isothermal backgrounds are hydrostatic") {
  for (auto phi : {IsothermalPotential::Linear, IsothermalPotential::Periodic}) {
    const Scenario1D sc = isothermal_1d(phi);
    for (double x : {0.1, 0.5, 0.9}) {
      const double h = 1e-5;
      const double dp = (sc.background(x + h).p - sc.background(x - h).p) / (2 * h);
      CHECK(dp == doctest::Approx(sc.background(x).rho * sc.gravity(x)).epsilon(1e-7));
      CHECK(sc.gravity(x) == doctest::Approx(-(sc.potential(x + h) - sc.potential(x - h)) / (2 * h)).epsilon(1e-7));
    }
  }
}

TEST_CASE("sound crossing time of the isothermal state") {
  const Scenario1D sc = isothermal_1d(IsothermalPotential::Linear);
  CHECK(sound_crossing_time(sc) == doctest::Approx(0.845154254728517).epsilon(1e-10));
}

TEST_CASE("perturbation adds the expected pressure") {
  const Scenario1D flat = isothermal_perturbed_1d(0.0), bump = isothermal_perturbed_1d(1e-3);
  const Grid1D g = bump.make_grid(200, 0);
  double excess = 0.0;
  for (int i = 0; i < 200; ++i)
    excess += g.dx() * (bump.initial(g.center(i)).p - flat.initial(g.center(i)).p);
  CHECK(excess == doctest::Approx(1e-3 * 0.177245385090279).epsilon(1e-6));
}

TEST_CASE("radiation polytrope background is hydrostatic") {
  const Scenario1D sc = polytropic_radiation_1d();
  CHECK(sc.eos.kind() == EosKind::IdealRadiation);
  for (double x : {0.2, 0.6}) {
    const double h = 1e-5;
    const double dp = (sc.background(x + h).p - sc.background(x - h).p) / (2 * h);
    CHECK(dp == doctest::Approx(sc.background(x).rho * sc.gravity(x)).epsilon(1e-7));
  }
}

TEST_CASE("2d polytrope background is hydrostatic") {
  const Scenario2D sc = polytrope_2d();
  for (auto [x, y] : {std::pair{0.1, 0.2}, std::pair{-0.3, 0.05}, std::pair{0.0, 0.0}}) {
    const double h = 1e-5;
    const Eigen::Vector2d g = sc.gravity(x, y);
    const double dpx = (sc.background(x + h, y).p - sc.background(x - h, y).p) / (2 * h);
    const double dpy = (sc.background(x, y + h).p - sc.background(x, y - h).p) / (2 * h);
    const double rho = sc.background(x, y).rho;
    CHECK(dpx == doctest::Approx(rho * g[0]).epsilon(1e-6).scale(1.0));
    CHECK(dpy == doctest::Approx(rho * g[1]).epsilon(1e-6).scale(1.0));
  }
}

TEST_CASE("rayleigh-taylor background is hydrostatic on both sides of the interface") {
  const Scenario2D sc = radial_rayleigh_taylor_2d();
  for (double r : {0.1, 0.3}) {
    const double x = r * std::cos(0.4), y = r * std::sin(0.4), h = 1e-6;
    const Eigen::Vector2d g = sc.gravity(x, y);
    const double dpx = (sc.background(x + h, y).p - sc.background(x - h, y).p) / (2 * h);
    CHECK(dpx == doctest::Approx(sc.background(x, y).rho * g[0]).epsilon(1e-6));
  }
}

TEST_CASE("cell averages integrate the initial data") {
  const Scenario1D sc = isothermal_1d(IsothermalPotential::Linear);
  const Grid1D g = sc.make_grid(10, 2);
  const CellField1 q = init_cell_averages(sc, g);
  // rho = exp(-10 x); first cell is [0, 0.1].
  CHECK(q.at(g.storage(0))[0] == doctest::Approx(0.632120558828558).epsilon(1e-12));
  CHECK(q.at(g.storage(-1))[0] > q.at(g.storage(0))[0]);
  CHECK(q.at(g.storage(3))[1] == 0.0);
}

TEST_CASE("discrete equilibrium is at rest under the piecewise scheme") {
  const Scenario1D sc = isothermal_1d(IsothermalPotential::Linear);
  for (int order : {3, 5}) {
    SchemeConfig scheme;
    scheme.kind = SchemeKind::Dwb;
    scheme.order = order;
    const Grid1D g = sc.make_grid(64, scheme.ghosts());
    Solver1D solver(g, scheme, sc.eos, sc.gravity, sc.bc);
    DiscreteEquilibrium eq = discrete_equilibrium_init(sc, solver);
    solver.set_boundary_data(eq.field);
    CellField1 out(g);
    solver.fill_ghosts(eq.field);
    solver.rhs(eq.field, out);
    CHECK(out.data().cwiseAbs().maxCoeff() <= 1e-11);
  }
}

TEST_CASE("scenario lookup by name") {
  CHECK(is_scenario_2d("polytrope"));
  CHECK_FALSE(is_scenario_2d("riemann"));
  CHECK(scenario_names().size() == 8);
  CHECK(scenario_1d("riemann").potential(0.1) == doctest::Approx(1.0));
  CHECK(scenario_1d("riemann", {{"slope", 1.0}}).potential(0.1) == doctest::Approx(0.1));
  CHECK(scenario_1d("relaxation", {{"t_end", 3.0}}).t_end == 3.0);
  CHECK_THROWS_AS(scenario_1d("riemann", {{"eta", 1.0}}), ConfigError);
  CHECK_THROWS_AS(scenario_1d("shock-tube"), ConfigError);
  CHECK_THROWS_AS(scenario_2d("riemann"), ConfigError);
}
