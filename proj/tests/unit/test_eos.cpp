#include "wbfv/core/types.hpp"
#include "wbfv/eos.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace wbfv;

TEST_CASE("ideal gas closure") {
  const EosModel eos = EosModel::ideal(1.4);
  CHECK(eos.is_ideal());
  CHECK(eos.internal_energy(1.0, 0.4) == doctest::Approx(1.0));
  CHECK(eos.pressure(3.0, 2.5) == doctest::Approx(1.0));
  CHECK(eos.deps_dp(1.0, 1.0) == doctest::Approx(2.5));
  CHECK(eos.deps_drho(1.0, 1.0) == doctest::Approx(0.0));
  CHECK(eos.sound_speed(1.4, 1.0) == doctest::Approx(1.0));
  CHECK(eos.gamma1(0.7, 3.0) == doctest::Approx(1.4));
}

TEST_CASE("radiation closure against high-precision values") {
  const EosModel eos = EosModel::radiation(1.4);
  CHECK(eos.temperature_from_pressure(2.0, 0.5) == doctest::Approx(0.248105411266789).epsilon(1e-13));
  CHECK(eos.internal_energy(2.0, 0.5) == doctest::Approx(1.25189458873321069).epsilon(1e-13));
  CHECK(eos.internal_energy(1.0, 1.0) == doctest::Approx(2.63775402049974219).epsilon(1e-13));
  CHECK(eos.deps_dp(1.0, 1.0) == doctest::Approx(2.80167468092039834).epsilon(1e-12));
  CHECK(eos.deps_drho(1.0, 1.0) == doctest::Approx(-0.218560880560874866).epsilon(1e-12));
  // At rho = 1, p = 2 the temperature is exactly 1.
  CHECK(eos.internal_energy(1.0, 2.0) == doctest::Approx(5.5).epsilon(1e-14));
  CHECK(eos.deps_dp(1.0, 2.0) == doctest::Approx(2.9).epsilon(1e-13));
  CHECK(eos.gamma1(1.0, 2.0) == doctest::Approx(1.36206896551724138).epsilon(1e-12));
  CHECK(eos.sound_speed(1.0, 2.0) == doctest::Approx(1.65049626810680271).epsilon(1e-12));
}

TEST_CASE("pressure and internal energy are inverse") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (const EosModel& eos : {EosModel::ideal(5.0 / 3.0), EosModel::radiation(1.4)}) {
    double worst = 0.0;
    for (int k = 0; k < 500; ++k) {
      const double rho = std::exp(u(rng)), p = std::exp(u(rng));
      worst = std::max(worst, std::abs(eos.pressure(rho, eos.internal_energy(rho, p)) / p - 1.0));
    }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("radiation derivatives match finite differences") {
  const EosModel eos = EosModel::radiation(1.4);
  for (double rho : {0.01, 1.0, 50.0})
    for (double p : {0.001, 1.0, 30.0}) {
      const double h = 1e-6 * p, k = 1e-6 * rho;
      const double fd_p = (eos.internal_energy(rho, p + h) - eos.internal_energy(rho, p - h)) / (2 * h);
      const double fd_r = (eos.internal_energy(rho + k, p) - eos.internal_energy(rho - k, p)) / (2 * k);
      CHECK(eos.deps_dp(rho, p) == doctest::Approx(fd_p).epsilon(1e-6));
      CHECK(eos.deps_drho(rho, p) == doctest::Approx(fd_r).epsilon(1e-5));
      CHECK(eos.deps_dp(rho, p) > 0.0);
    }
}

TEST_CASE("radiation limits approach the ideal gas") {
  // Gas-dominated regime: T^4 << rho T.
  const EosModel rad = EosModel::radiation(1.4), ideal = EosModel::ideal(1.4);
  CHECK(rad.internal_energy(1e6, 1e-3) == doctest::Approx(ideal.internal_energy(1e6, 1e-3)).epsilon(1e-10));
  CHECK(rad.gamma1(1e6, 1e-3) == doctest::Approx(1.4).epsilon(1e-8));
  // Radiation-dominated regime tends to Gamma_1 = 4/3.
  CHECK(rad.gamma1(1e-8, 1e4) == doctest::Approx(4.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("eos construction and invalid input") {
  CHECK(EosModel::from_name("radiation", 1.4).kind() == EosKind::IdealRadiation);
  CHECK(EosModel::from_name("ideal", 1.4).name() == "ideal");
  CHECK_THROWS_AS(EosModel::from_name("vdw", 1.4), ConfigError);
  CHECK_THROWS(EosModel::ideal(1.0));
  const EosModel rad = EosModel::radiation(1.4);
  CHECK_THROWS_AS(rad.temperature_from_pressure(1.0, -1.0), EosError);
}
