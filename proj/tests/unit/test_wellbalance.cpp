#include "wbfv/core/quadrature.hpp"
#include "wbfv/eos.hpp"
#include "wbfv/reconstruct.hpp"
#include "wbfv/wellbalance.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace wbfv;

namespace {

constexpr double kDx = 0.05, kXc = 0.4;

// Isothermal profile rho = exp(-x), g = -1: p = rho.
Poly1d cell_poly(int off, double (*f)(double), int degree) {
  const double c = kXc + off * kDx;
  std::vector<double> coeffs;
  double fact = 1.0, h = 1.0;
  for (int k = 0; k <= degree; ++k) {
    coeffs.push_back(f(c) * (k % 2 ? -1.0 : 1.0) * h / fact);
    h *= kDx;
    fact *= k + 1;
  }
  return Poly1d::from_range(coeffs.begin(), degree + 1, c, kDx);
}

double decay(double x) { return std::exp(-x); }

LocalSource1D isothermal_source_la(int r) {
  return build_source_la(cell_poly(0, decay, 6), Poly1d::constant(-1.0, kXc, kDx), r, kXc, kDx);
}

}  // namespace

TEST_CASE("scheme names and ghost counts") {
  CHECK(scheme_from_name("dwb-s") == SchemeKind::DwbS);
  CHECK(scheme_name(SchemeKind::La) == "la");
  CHECK_THROWS_AS(scheme_from_name("wb"), ConfigError);
  CHECK(required_ghosts(SchemeKind::Standard, 5) == 3);
  CHECK(required_ghosts(SchemeKind::Dwb, 3) >= 3);
  CHECK(is_simplified(SchemeKind::LaS));
  CHECK_FALSE(is_well_balanced(SchemeKind::Standard));
}

TEST_CASE("extrapolated source integrates the local density") {
  const LocalSource1D s = isothermal_source_la(2);
  CHECK_FALSE(s.is_piecewise());
  for (int off = -2; off <= 2; ++off) {
    const double x = kXc + (off + 0.3) * kDx;
    CHECK(s.integral(off, x) == doctest::Approx(std::exp(-x) - std::exp(-kXc)).epsilon(1e-9));
  }
  CHECK(s.integral(0, kXc) == 0.0);
}

TEST_CASE("piecewise source is continuous across interfaces") {
  std::vector<Poly1d> rho, g;
  for (int off = -2; off <= 2; ++off) {
    rho.push_back(cell_poly(off, decay, 2));
    g.push_back(Poly1d::from_coeffs({-1.0 + 0.01 * off, 0.02}, kXc + off * kDx, kDx));
  }
  const LocalSource1D s = build_source_dwb(rho, g, kXc, kDx);
  CHECK(s.is_piecewise());
  for (int off = -2; off < 2; ++off) {
    const double face = kXc + (off + 0.5) * kDx;
    CHECK(s.integral(off, face) == doctest::Approx(s.integral(off + 1, face)).epsilon(1e-14));
  }
  const double total = s.integral(0, kXc + 0.5 * kDx) + s.cell_integral(1) + s.cell_integral(2);
  CHECK(total == doctest::Approx(s.integral(2, kXc + 2.5 * kDx)).epsilon(1e-13));
}

TEST_CASE("anchor pressure reproduces the cell internal energy") {
  const GaussRule rule(3);
  const LocalSource1D s = isothermal_source_la(1);
  const EosModel ideal = EosModel::ideal(1.4), rad = EosModel::radiation(1.4);
  const double eps_hat = 2.0;
  const double p_ideal = anchor_pressure_ideal(s, eps_hat, 1.4, rule);
  EquilibriumProfile1D prof{0, s, p_ideal};
  CHECK(prof.internal_energy_average(0, ideal, rule) == doctest::Approx(eps_hat).epsilon(1e-14));

  const NewtonResult nr = anchor_pressure_newton(s, eps_hat, std::exp(-kXc), rad, rule);
  prof.p0 = nr.p0;
  CHECK(prof.internal_energy_average(0, rad, rule) == doctest::Approx(eps_hat).epsilon(1e-13));
  CHECK(nr.iterations < 20);
  CHECK(monotonicity_probe(prof, rad, rule));
  CHECK(anchor_pressure_newton(s, eps_hat, 1.0, ideal, rule).p0 == doctest::Approx(p_ideal).epsilon(1e-13));
}

TEST_CASE("simplified anchor evaluates the centre state") {
  const EosModel eos = EosModel::ideal(1.4);
  const Poly1d rho = Poly1d::constant(2.0, kXc, kDx), mom = Poly1d::constant(2.0, kXc, kDx);
  const Poly1d ene = Poly1d::constant(3.5, kXc, kDx);  // eps = 3.5 - 1 = 2.5
  CHECK(anchor_pressure_simplified(rho, mom, ene, eos) == doctest::Approx(1.0));
}

TEST_CASE("hydrostatic reconstruction of an equilibrium has no perturbation") {
  const GaussRule rule(3);
  const EosModel eos = EosModel::ideal(1.4);
  const Cweno1D cw(3);
  const LocalSource1D s = isothermal_source_la(1);
  // Equilibrium with p = exp(-x): energies are p / (gamma - 1).
  std::vector<double> e_avg;
  for (int off = -1; off <= 1; ++off) {
    const double a = kXc + (off - 0.5) * kDx, b = a + kDx;
    e_avg.push_back((std::exp(-a) - std::exp(-b)) / kDx / 0.4);
  }
  const double eps_hat = e_avg[1];
  EquilibriumProfile1D prof{0, s, anchor_pressure_ideal(s, eps_hat, 1.4, rule)};
  CHECK(prof.p0 == doctest::Approx(std::exp(-kXc)).epsilon(1e-6));
  const Poly1d rho = cell_poly(0, decay, 4), mom = Poly1d::constant(0.0, kXc, kDx);
  const HydroRec1D rec = hydrostatic_reconstruct_1d(cw, e_avg, rho, mom, prof, eos, rule);
  CHECK_FALSE(rec.fallback);
  for (double x : {kXc - 0.5 * kDx, kXc, kXc + 0.5 * kDx})
    CHECK(std::abs(rec.delta_e(x)) <= 1e-7);
}

TEST_CASE("2d profile pressure follows the gravity field") {
  const Eigen::Vector2d c(0.1, 0.2), h(0.05, 0.05);
  const Poly2d rho = Poly2d::constant(1.5, c, h);
  const Poly2d gx = Poly2d::constant(-1.0, c, h), gy = Poly2d::constant(-2.0, c, h);
  EquilibriumProfile2D prof = build_profile_2d(rho, gx, gy);
  prof.p0 = 3.0;
  CHECK(prof.pressure(0.1, 0.2) == doctest::Approx(3.0));
  CHECK(prof.pressure(0.12, 0.21) == doctest::Approx(3.0 - 1.5 * (0.02 + 2.0 * 0.01)).epsilon(1e-13));

  const GaussRule rule(3);
  const double p_ideal = anchor_pressure_ideal_2d(prof, 2.0, 1.4);
  const NewtonResult nr = anchor_pressure_newton_2d(prof, 2.0, 1.5, EosModel::ideal(1.4), rule);
  CHECK(nr.p0 == doctest::Approx(p_ideal).epsilon(1e-12));
}
