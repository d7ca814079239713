#include "wbfv/core/quadrature.hpp"
#include "wbfv/reconstruct.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace wbfv;

namespace {

const GaussRule kRule(5);

template <class F>
std::vector<double> stencil_averages(F&& f, double xc, double dx, int r) {
  std::vector<double> avg;
  for (int k = -r; k <= r; ++k) avg.push_back(kRule.average(f, xc + k * dx, dx));
  return avg;
}

double face_error(const Cweno1D& cw, double dx) {
  auto f = [](double x) { return std::sin(2.0 * M_PI * x) + 0.3 * x; };
  const double xc = 0.31;
  const Poly1d p = cw.reconstruct(stencil_averages(f, xc, dx, cw.radius()), xc, dx);
  return std::abs(p(xc + 0.5 * dx) - f(xc + 0.5 * dx));
}

}  // namespace

TEST_CASE("cweno optimal weights") {
  const Cweno1D c3(3), c5(5);
  CHECK(c3.radius() == 1);
  CHECK(c5.radius() == 2);
  CHECK(c3.central_weight() + 2.0 * c3.side_weight() == doctest::Approx(1.0));
  CHECK(c5.central_weight() + 3.0 * c5.side_weight() == doctest::Approx(1.0));
  CHECK_THROWS(Cweno1D(2));
  CHECK_THROWS(Cweno1D(7));
}

TEST_CASE("cweno preserves the cell mean") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  for (int order : {1, 3, 5}) {
    const Cweno1D cw(order);
    for (int t = 0; t < 100; ++t) {
      std::vector<double> avg(2 * cw.radius() + 1);
      for (double& a : avg) a = u(rng);
      const double dx = 0.01 + u(rng);
      const Poly1d p = cw.reconstruct(avg, 1.0, dx);
      CHECK(p.average(1.0 - 0.5 * dx, 1.0 + 0.5 * dx) == doctest::Approx(avg[cw.radius()]).epsilon(1e-13));
    }
  }
}

TEST_CASE("cweno face values converge at the design order") {
  for (int order : {3, 5}) {
    const Cweno1D cw(order);
    const double e1 = face_error(cw, 0.02), e2 = face_error(cw, 0.01);
    CHECK(std::log2(e1 / e2) >= order - 0.5);
  }
}

TEST_CASE("cweno does not overshoot at a jump") {
  for (int order : {3, 5}) {
    const Cweno1D cw(order);
    const int r = cw.radius();
    std::vector<double> avg(2 * r + 1, 0.0);
    for (int k = r + 1; k <= 2 * r; ++k) avg[k] = 1.0;
    const double dx = 0.01;
    const Poly1d p = cw.reconstruct(avg, 0.0, dx);
    for (int a = 0; a <= 10; ++a) {
      const double x = (-0.5 + 0.1 * a) * dx;
      CHECK(std::abs(p(x)) <= 1e-3);
    }
  }
}

TEST_CASE("gravity interpolation is exact on polynomials of degree order-1") {
  for (int order : {1, 3, 5}) {
    const GravityInterp1D gi(order);
    const int r = (order - 1) / 2;
    auto g = [&](double x) {
      double v = 0.0, xp = 1.0;
      for (int k = 0; k < order; ++k, xp *= x) v += (k + 1) * xp;
      return v;
    };
    std::vector<double> vals;
    const double xc = 0.2, dx = 0.05;
    for (int k = -r; k <= r; ++k) vals.push_back(g(xc + k * dx));
    const Poly1d p = gi.interpolate(vals, xc, dx);
    for (double x : {0.17, 0.2, 0.23}) CHECK(p(x) == doctest::Approx(g(x)).epsilon(1e-12));
  }
}

TEST_CASE("cweno2d preserves the mean and reproduces planes") {
  const Cweno2D cw(3);
  const double dx = 0.1, dy = 0.2, xc = 0.4, yc = -0.3;
  auto plane = [](double x, double y) { return 1.0 + 2.0 * x - 3.0 * y; };
  std::vector<double> avg(9);
  for (int dj = -1; dj <= 1; ++dj)
    for (int di = -1; di <= 1; ++di) avg[(dj + 1) * 3 + di + 1] = plane(xc + di * dx, yc + dj * dy);
  const Poly2d p = cw.reconstruct(avg, xc, yc, dx, dy);
  CHECK(p.average(xc - dx / 2, xc + dx / 2, yc - dy / 2, yc + dy / 2) == doctest::Approx(avg[4]).epsilon(1e-13));
  for (double x : {xc - dx / 2, xc + dx / 2})
    for (double y : {yc - dy / 2, yc + dy / 2}) CHECK(p(x, y) == doctest::Approx(plane(x, y)).epsilon(1e-12));
}

TEST_CASE("gravity interpolation in 2d is exact for quadratics") {
  auto gx = [](double x, double y) { return 1.0 + x * y - 2.0 * x * x; };
  auto gy = [](double x, double y) { return y * y + 0.5 * x; };
  const double xc = 0.1, yc = 0.2, dx = 0.05, dy = 0.05;
  std::vector<double> vx(9), vy(9);
  for (int dj = -1; dj <= 1; ++dj)
    for (int di = -1; di <= 1; ++di) {
      vx[(dj + 1) * 3 + di + 1] = gx(xc + di * dx, yc + dj * dy);
      vy[(dj + 1) * 3 + di + 1] = gy(xc + di * dx, yc + dj * dy);
    }
  const auto [px, py] = interpolate_gravity_2d(vx, vy, xc, yc, dx, dy);
  for (double x : {0.08, 0.12})
    for (double y : {0.18, 0.21}) {
      CHECK(px(x, y) == doctest::Approx(gx(x, y)).epsilon(1e-12));
      CHECK(py(x, y) == doctest::Approx(gy(x, y)).epsilon(1e-12));
    }
}
