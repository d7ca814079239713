#include "wbfv/eos.hpp"

#include "wbfv/core/types.hpp"

#include <algorithm>
#include <cmath>

namespace wbfv {
namespace {

constexpr int kMaxNewton = 100;
constexpr double kRelTol = 1e-14;

// Root of a*T + b*T^4 = target for a, b, target > 0. Newton from the upper
// bound min(target/a, (target/b)^(1/4)) decreases monotonically to the root.
double solve_quartic_temperature(double a, double b, double target, double rho) {
  if (!(a > 0.0) || !(target > 0.0) || !std::isfinite(target) || !std::isfinite(a))
    throw EosError("non-physical input to radiation EoS", rho, target);
  double t = std::min(target / a, std::pow(target / b, 0.25));
  for (int it = 0; it < kMaxNewton; ++it) {
    const double t3 = t * t * t;
    const double f = a * t + b * t3 * t - target;
    const double fp = a + 4.0 * b * t3;
    const double step = f / fp;
    t -= step;
    if (std::abs(step) <= kRelTol * t) return t;
  }
  double lo = 0.0, hi = 2.0 * std::max(target / a, std::pow(target / b, 0.25));
  for (int it = 0; it < 200 && hi - lo > kRelTol * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (a * mid + b * mid * mid * mid * mid < target ? lo : hi) = mid;
  }
  if (!(hi - lo <= kRelTol * hi)) throw EosError("temperature solve did not converge", rho, target);
  return 0.5 * (lo + hi);
}

}  // namespace

EosModel::EosModel(EosKind kind, double gamma) : kind_(kind), gamma_(gamma) {
  if (!(gamma > 1.0)) throw ConfigError("EoS requires gamma > 1");
  gm1_ = gamma - 1.0;
  inv_gm1_ = 1.0 / gm1_;
}

EosModel EosModel::from_name(std::string_view name, double gamma) {
  if (name == "ideal") return ideal(gamma);
  if (name == "radiation") return radiation(gamma);
  throw ConfigError("unknown EoS '" + std::string(name) + "'");
}

double EosModel::temperature_from_energy(double rho, double eps) const {
  if (!(rho > 0.0)) throw EosError("non-positive density", rho, eps);
  if (kind_ == EosKind::Ideal) return eps * gm1_ / rho;
  return solve_quartic_temperature(rho * inv_gm1_, 3.0, eps, rho);
}

double EosModel::temperature_from_pressure(double rho, double p) const {
  if (!(rho > 0.0)) throw EosError("non-positive density", rho, p);
  if (kind_ == EosKind::Ideal) return p / rho;
  return solve_quartic_temperature(rho, 1.0, p, rho);
}

double EosModel::deps_dp(double rho, double p) const {
  if (kind_ == EosKind::Ideal) return inv_gm1_;
  const double t = temperature_from_pressure(rho, p);
  const double t3 = t * t * t;
  return (rho * inv_gm1_ + 12.0 * t3) / (rho + 4.0 * t3);
}

double EosModel::deps_drho(double rho, double p) const {
  if (kind_ == EosKind::Ideal) return 0.0;
  const double t = temperature_from_pressure(rho, p);
  const double t3 = t * t * t;
  const double dt_drho = -t / (rho + 4.0 * t3);
  return t * inv_gm1_ + (rho * inv_gm1_ + 12.0 * t3) * dt_drho;
}

double EosModel::gamma1(double rho, double p) const {
  if (kind_ == EosKind::Ideal) return gamma_;
  const double t = temperature_from_pressure(rho, p);
  const double beta = rho * t / p;
  const double num = (4.0 - 3.0 * beta) * (4.0 - 3.0 * beta) * gm1_;
  return beta + num / (beta + 12.0 * gm1_ * (1.0 - beta));
}

double EosModel::sound_speed(double rho, double p) const {
  if (!(rho > 0.0) || !(p > 0.0)) throw EosError("sound speed of non-physical state", rho, p);
  return std::sqrt(gamma1(rho, p) * p / rho);
}

}  // namespace wbfv
