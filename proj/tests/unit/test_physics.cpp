#include "wbfv/physics.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace wbfv;

namespace {

const FluxKind kAllFluxes[] = {FluxKind::Roe, FluxKind::Hllc, FluxKind::Rusanov};

State1 mirror(const State1& q) { return {q[0], -q[1], q[2]}; }

}  // namespace

TEST_CASE("primitive round trip") {
  const EosModel eos = EosModel::radiation(1.4);
  const State2 q = from_primitive<2>(1.3, 0.4, -0.2, 0.9, eos);
  const Primitive sx = to_primitive<2>(q, eos, 0), sy = to_primitive<2>(q, eos, 1);
  CHECK(sx.rho == doctest::Approx(1.3));
  CHECK(sx.un == doctest::Approx(0.4));
  CHECK(sx.ut == doctest::Approx(-0.2));
  CHECK(sx.p == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(sy.un == doctest::Approx(-0.2));
  CHECK(sy.ut == doctest::Approx(0.4));
}

TEST_CASE("physical flux of an ideal gas") {
  const EosModel eos = EosModel::ideal(1.4);
  const State1 q = from_primitive<1>(2.0, 3.0, 0.0, 0.4, eos);
  const State1 f = physical_flux<1>(q, eos, 0);
  // E = 1 + 9 = 10
  CHECK(f[0] == doctest::Approx(6.0));
  CHECK(f[1] == doctest::Approx(18.4));
  CHECK(f[2] == doctest::Approx(31.2));
}

TEST_CASE("numerical fluxes are consistent") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (const EosModel& eos : {EosModel::ideal(1.4), EosModel::radiation(1.4)})
    for (FluxKind k : kAllFluxes)
      for (int t = 0; t < 50; ++t) {
        const State2 q = from_primitive<2>(std::exp(u(rng)), u(rng), u(rng), std::exp(u(rng)), eos);
        for (int dir : {0, 1}) {
          const State2 f = numerical_flux<2>({k, false}, q, q, eos, dir);
          const State2 exact = physical_flux<2>(q, eos, dir);
          CHECK((f - exact).norm() <= 1e-12 * (1.0 + exact.norm()));
        }
      }
}

TEST_CASE("fluxes respect mirror symmetry") {
  const EosModel eos = EosModel::ideal(1.4);
  const State1 l = from_primitive<1>(1.0, 0.3, 0.0, 1.0, eos), r = from_primitive<1>(0.125, -0.1, 0.0, 0.1, eos);
  for (FluxKind k : kAllFluxes) {
    const State1 f = numerical_flux<1>({k, false}, l, r, eos, 0);
    const State1 g = numerical_flux<1>({k, false}, mirror(r), mirror(l), eos, 0);
    CHECK(f[0] == doctest::Approx(-g[0]).epsilon(1e-12));
    CHECK(f[1] == doctest::Approx(g[1]).epsilon(1e-12));
    CHECK(f[2] == doctest::Approx(-g[2]).epsilon(1e-12));
  }
}

TEST_CASE("roe and hllc resolve stationary contacts exactly") {
  for (const EosModel& eos : {EosModel::ideal(1.4), EosModel::radiation(1.4)})
    for (FluxKind k : {FluxKind::Roe, FluxKind::Hllc}) {
      const ContactReport r = contact_property_check({k, false}, eos, 1000, 5);
      CHECK(r.trials == 1000);
      CHECK(r.passed());
      CHECK(r.max_deviation <= 1e-13);
    }
}

TEST_CASE("rusanov smears stationary contacts") {
  const ContactReport r = contact_property_check({FluxKind::Rusanov, false}, EosModel::ideal(1.4), 50, 5);
  CHECK_FALSE(r.passed());
}

TEST_CASE("wall flux of a resting state is pure pressure") {
  const EosModel eos = EosModel::radiation(1.4);
  const State2 q = from_primitive<2>(0.8, 0.0, 0.5, 1.7, eos);
  for (FluxKind k : {FluxKind::Roe, FluxKind::Hllc})
    for (int side : {-1, 1}) {
      const State2 f = wall_boundary_flux<2>({k, false}, q, eos, 0, side);
      CHECK(std::abs(f[0]) <= 1e-14);
      CHECK(f[1] == doctest::Approx(1.7).epsilon(1e-13));
      CHECK(std::abs(f[2]) <= 1e-14);
      CHECK(std::abs(f[3]) <= 1e-13);
    }
}

TEST_CASE("source averages") {
  // rho*g = -2 on [0, 1], momentum x with g = -2.
  const Poly1d s = Poly1d::constant(-2.0, 0.5, 1.0);
  const Poly1d mom = Poly1d::from_coeffs({0.5, 1.0}, 0.5, 1.0);
  const Poly1d g = Poly1d::constant(-2.0, 0.5, 1.0);
  const State1 src = source_average_1d(s, mom, g, 0.0, 1.0);
  CHECK(src[0] == 0.0);
  CHECK(src[1] == doctest::Approx(-2.0));
  CHECK(src[2] == doctest::Approx(-1.0));
}

TEST_CASE("flux names") {
  CHECK(flux_from_name("hllc") == FluxKind::Hllc);
  CHECK(flux_name(FluxKind::Roe) == "roe");
  CHECK_THROWS_AS(flux_from_name("hll"), ConfigError);
}
