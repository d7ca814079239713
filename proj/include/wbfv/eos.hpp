#pragma once

#include <string>
#include <string_view>

namespace wbfv {

enum class EosKind { Ideal, IdealRadiation };

/// Closure p(rho, eps). The radiation variant is p = rho*T + T^4 with
/// eps = rho*T/(gamma-1) + 3*T^4 in nondimensional units.
class EosModel {
 public:
  EosModel(EosKind kind, double gamma);

  static EosModel ideal(double gamma) { return {EosKind::Ideal, gamma}; }
  static EosModel radiation(double gamma) { return {EosKind::IdealRadiation, gamma}; }
  /// "ideal" or "radiation".
  static EosModel from_name(std::string_view name, double gamma);

  EosKind kind() const { return kind_; }
  bool is_ideal() const { return kind_ == EosKind::Ideal; }
  double gamma() const { return gamma_; }
  std::string name() const { return is_ideal() ? "ideal" : "radiation"; }

  double pressure(double rho, double eps) const {
    if (kind_ == EosKind::Ideal) return gm1_ * eps;
    const double t = temperature_from_energy(rho, eps);
    return rho * t + t * t * t * t;
  }

  double internal_energy(double rho, double p) const {
    if (kind_ == EosKind::Ideal) return p * inv_gm1_;
    const double t = temperature_from_pressure(rho, p);
    return rho * t * inv_gm1_ + 3.0 * t * t * t * t;
  }

  /// d(eps)/dp at fixed rho.
  double deps_dp(double rho, double p) const;
  /// d(eps)/d(rho) at fixed p.
  double deps_drho(double rho, double p) const;
  double sound_speed(double rho, double p) const;
  /// First adiabatic index Gamma_1 = c^2 rho / p.
  double gamma1(double rho, double p) const;

  double temperature_from_energy(double rho, double eps) const;
  double temperature_from_pressure(double rho, double p) const;

 private:
  EosKind kind_;
  double gamma_;
  double gm1_;
  double inv_gm1_;
};

}  // namespace wbfv
