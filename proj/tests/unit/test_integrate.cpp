#include "wbfv/integrate.hpp"
#include "wbfv/solver.hpp"

#include <doctest.h>

#include <cmath>

using namespace wbfv;

namespace {

double decay_error(const ButcherTableau& tab, int steps) {
  const double dt = 1.0 / steps;
  double y = 1.0, t = 0.0;
  for (int k = 0; k < steps; ++k, t += dt)
    y = rk_step_scalar(y, t, tab, dt, [](double tt, double yy) { return -yy + std::cos(tt); });
  return std::abs(y - (0.5 * std::exp(-1.0) + 0.5 * (std::cos(1.0) + std::sin(1.0))));
}

// dq/dt = -q on every entry, with a fixed step.
struct DecaySolver {
  using Field = CellField1;
  int calls = 0;
  void fill_ghosts(Field&) {}
  double cfl_dt(const Field&, double cfl) const { return 0.1 * cfl; }
  void rhs(Field& q, Field& out) {
    ++calls;
    out.data() = -q.data();
  }
  void check_state(const Field&) const {}
};

}  // namespace

TEST_CASE("tableaux are consistent") {
  for (int order : {1, 3, 5}) {
    const ButcherTableau tab = ButcherTableau::for_order(order);
    CHECK(tab.order == order);
    CHECK(tab.b.sum() == doctest::Approx(1.0));
    for (int i = 0; i < tab.stages(); ++i) {
      CHECK(tab.a.row(i).sum() == doctest::Approx(tab.c[i]));
      for (int j = i; j < tab.stages(); ++j) CHECK(tab.a(i, j) == 0.0);
    }
  }
  CHECK(ButcherTableau::ssprk43().stages() == 4);
  CHECK(ButcherTableau::rk5().stages() == 6);
}

TEST_CASE("measured temporal orders") {
  const double r1 = std::log2(decay_error(ButcherTableau::forward_euler(), 64) /
                              decay_error(ButcherTableau::forward_euler(), 128));
  const double r3 = std::log2(decay_error(ButcherTableau::ssprk43(), 16) / decay_error(ButcherTableau::ssprk43(), 32));
  const double r5 = std::log2(decay_error(ButcherTableau::rk5(), 4) / decay_error(ButcherTableau::rk5(), 8));
  CHECK(r1 == doctest::Approx(1.0).epsilon(0.1));
  CHECK(r3 == doctest::Approx(3.0).epsilon(0.05));
  CHECK(r5 == doctest::Approx(5.0).epsilon(0.03));
}

TEST_CASE("field step matches the scalar step") {
  const ButcherTableau tab = ButcherTableau::rk5();
  CellField1 q(4);
  q.data().setConstant(2.0);
  std::vector<CellField1> work;
  rk_step(q, tab, 0.1, [](CellField1& s, CellField1& out) { out.data() = -s.data(); }, work);
  const double y = rk_step_scalar(2.0, 0.0, tab, 0.1, [](double, double v) { return -v; });
  CHECK(q.data()(2, 3) == doctest::Approx(y).epsilon(1e-15));
  CHECK(y == doctest::Approx(2.0 * std::exp(-0.1)).epsilon(1e-8));
}

TEST_CASE("momentum damping is exact and leaves mass and energy") {
  CellField1 q(3);
  q.data().setOnes();
  damp_momentum(q, 0.2, 0.5);
  CHECK(q.data()(1, 0) == doctest::Approx(std::exp(-0.1)));
  CHECK(q.data()(0, 0) == 1.0);
  CHECK(q.data()(2, 2) == 1.0);
}

TEST_CASE("advance lands on the end time") {
  DecaySolver solver;
  CellField1 q(2);
  q.data().setOnes();
  AdvanceOptions opt;
  opt.t_end = 1.0;
  opt.cfl = 0.3;  // dt = 0.03
  const AdvanceResult res = advance(solver, q, ButcherTableau::ssprk43(), opt);
  CHECK(res.t == 1.0);
  CHECK(res.steps == 34);
  CHECK(solver.calls == 4 * 34);
  CHECK(q.data()(0, 0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-6));
}

TEST_CASE("advance stops when the observer asks") {
  DecaySolver solver;
  CellField1 q(1);
  q.data().setOnes();
  AdvanceOptions opt;
  opt.t_end = 1.0;
  opt.observer = [](double, long steps) { return steps < 3; };
  const AdvanceResult res = advance(solver, q, ButcherTableau::forward_euler(), opt);
  CHECK(res.stopped_early);
  CHECK(res.steps == 3);
}

TEST_CASE("step controller rejects bad input") {
  CHECK_THROWS_AS((StepController{0.0, 1.0}.validate()), ConfigError);
  CHECK_THROWS_AS((StepController{1.5, 1.0}.validate()), ConfigError);
  CHECK_THROWS_AS((StepController{0.5, -1.0}.validate()), ConfigError);
  DecaySolver solver;
  CellField1 q(1);
  AdvanceOptions opt;
  opt.t_end = 1.0;
  opt.max_steps = 2;
  CHECK_THROWS_AS(advance(solver, q, ButcherTableau::forward_euler(), opt), StepError);
}
