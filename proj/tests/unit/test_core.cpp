#include "wbfv/core/cell_field.hpp"
#include "wbfv/core/grid.hpp"
#include "wbfv/core/poly_ops.hpp"
#include "wbfv/core/polynomial.hpp"
#include "wbfv/core/quadrature.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace wbfv;

TEST_CASE("poly1 evaluates in scaled coordinates") {
  // 1 + 2 xi + 3 xi^2 with xi = (x - 0.5) / 0.1
  const Poly1d p = Poly1d::from_coeffs({1.0, 2.0, 3.0}, 0.5, 0.1);
  CHECK(p.degree() == 2);
  CHECK(p(0.5) == doctest::Approx(1.0));
  CHECK(p(0.6) == doctest::Approx(6.0));
  CHECK(p(0.4) == doctest::Approx(2.0));
}

TEST_CASE("poly1 integral, average and antiderivative agree") {
  const Poly1d p = Poly1d::from_coeffs({0.3, -1.2, 0.7, 2.1}, 0.25, 0.05);
  const double a = 0.17, b = 0.41;
  const Poly1d anti = p.antiderivative();
  CHECK(anti(0.25) == doctest::Approx(0.0));
  CHECK(p.integrate(a, b) == doctest::Approx(anti(b) - anti(a)).epsilon(1e-13));
  CHECK(p.average(a, b) * (b - a) == doctest::Approx(p.integrate(a, b)).epsilon(1e-13));
  const Poly1d back = anti.derivative();
  for (double x : {0.1, 0.25, 0.33})
    CHECK(back(x) == doctest::Approx(p(x)).epsilon(1e-12));
}

TEST_CASE("poly1 arithmetic") {
  const Poly1d p = Poly1d::from_coeffs({1.0, 1.0}, 0.0, 1.0);
  const Poly1d q = Poly1d::from_coeffs({-1.0, 1.0}, 0.0, 1.0);
  const Poly1d prod = p * q;  // x^2 - 1
  CHECK(prod.degree() == 2);
  CHECK(prod(3.0) == doctest::Approx(8.0));
  CHECK((p + q)(2.0) == doctest::Approx(4.0));
  CHECK((p - q)(2.0) == doctest::Approx(2.0));
  CHECK((2.0 * p)(2.0) == doctest::Approx(6.0));
}

TEST_CASE("poly1 is generic in the scalar type") {
  const Poly1<long double, 4> p = Poly1<long double, 4>::from_coeffs({1.0L, 0.0L, 1.0L}, 0.0L, 1.0L);
  CHECK(static_cast<double>(p.integrate(-1.0L, 1.0L)) == doctest::Approx(8.0 / 3.0));
  const Poly1<float, 3> f = Poly1<float, 3>::constant(2.0f);
  CHECK(f.integrate(0.0f, 3.0f) == doctest::Approx(6.0f));
}

TEST_CASE("poly2 integral matches closed form") {
  Poly2d p(Eigen::Vector2d(0.0, 0.0), Eigen::Vector2d(1.0, 1.0));
  p.set_coeff(0, 0, 1.0);
  p.set_coeff(1, 1, 2.0);  // 1 + 2xy
  p.set_coeff(2, 0, 3.0);  // + 3x^2
  // Integral over [0,1]x[0,2]: 2 + 2*(1/2)*(2) + 3*(1/3)*2 = 6
  CHECK(p.integrate(0.0, 1.0, 0.0, 2.0) == doctest::Approx(6.0));
  CHECK(p.average(0.0, 1.0, 0.0, 2.0) == doctest::Approx(3.0));
  CHECK(p(1.0, 2.0) == doctest::Approx(8.0));
}

TEST_CASE("radial potential has the source as its gradient") {
  const Eigen::Vector2d anchor(0.1, -0.2), scale(0.05, 0.05);
  // Gradient field of f = x^2 y + y^2 in local coordinates: (2 xi eta, xi^2 + 2 eta) / h.
  Poly2d sx(anchor, scale), sy(anchor, scale);
  sx.set_coeff(1, 1, 2.0 / scale[0]);
  sy.set_coeff(2, 0, 1.0 / scale[1]);
  sy.set_coeff(0, 1, 2.0 / scale[1]);
  const Poly2d pot = radial_potential(sx, sy);
  const Eigen::Vector2d from = anchor, to(0.13, -0.17);
  const double line = poly_line_integral_2d(sx, sy, from, to);
  CHECK(pot(to) - pot(from) == doctest::Approx(line).epsilon(1e-12));
}

TEST_CASE("gauss rules integrate polynomials through degree 2n-1") {
  for (int n = 1; n <= GaussRule::kMaxPoints; ++n) {
    const auto nodes = gauss_legendre(n, 0.0, 2.0);
    double w = 0.0;
    for (const auto& q : nodes) w += q.weight;
    CHECK(w == doctest::Approx(2.0));
    double acc = 0.0;
    for (const auto& q : nodes) acc += q.weight * std::pow(q.node, 2 * n - 1);
    CHECK(acc == doctest::Approx(std::pow(2.0, 2 * n) / (2 * n)).epsilon(1e-13));
  }
  CHECK_THROWS(GaussRule(0));
  CHECK_THROWS(GaussRule(GaussRule::kMaxPoints + 1));
}

TEST_CASE("gauss cell average of an exponential") {
  const GaussRule rule(5);
  const double avg = rule.average([](double x) { return std::exp(-10.0 * x); }, 0.05, 0.1);
  CHECK(avg == doctest::Approx(0.632120558828558).epsilon(1e-12));
}

TEST_CASE("grid geometry and storage offsets") {
  const Grid1D g(0.0, 1.0, 10, 3);
  CHECK(g.dx() == doctest::Approx(0.1));
  CHECK(g.n_total() == 16);
  CHECK(g.center(0) == doctest::Approx(0.05));
  CHECK(g.interface(10) == doctest::Approx(1.0));
  CHECK(g.center(-3) == doctest::Approx(-0.25));
  CHECK(g.storage(-3) == 0);
  CHECK_THROWS_AS(g.require_ghosts(4), ConfigError);
  CHECK_THROWS_AS(Grid1D(1.0, 0.0, 4, 1), ConfigError);
  CHECK_THROWS_AS(Grid1D(0.0, 1.0, 0, 1), ConfigError);

  const Grid2D g2(-0.5, 0.5, 0.0, 2.0, 4, 8, 2);
  CHECK(g2.stride() == 8);
  CHECK(g2.n_total() == 8 * 12);
  CHECK(g2.dy() == doctest::Approx(0.25));
  CHECK(g2.storage(0, 0) == 2 * 8 + 2);
}

TEST_CASE("cell field holds one column per cell") {
  const Grid2D g(0.0, 1.0, 0.0, 1.0, 4, 4, 1);
  CellField2 q(g);
  CHECK(q.size() == 36);
  CHECK(q.data().rows() == 4);
  q.at(g.storage(1, 2))[3] = 7.0;
  CHECK(q.data()(3, g.storage(1, 2)) == 7.0);
}
