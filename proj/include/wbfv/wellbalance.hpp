#pragma once

#include "wbfv/core/polynomial.hpp"
#include "wbfv/core/quadrature.hpp"
#include "wbfv/core/types.hpp"
#include "wbfv/eos.hpp"
#include "wbfv/reconstruct.hpp"

#include <algorithm>
#include <array>
#include <span>
#include <string>
#include <string_view>

namespace wbfv {

enum class SchemeKind { Standard, Dwb, DwbS, La, LaS };

SchemeKind scheme_from_name(std::string_view name);
std::string scheme_name(SchemeKind kind);
inline bool is_well_balanced(SchemeKind k) { return k != SchemeKind::Standard; }
inline bool is_piecewise(SchemeKind k) { return k == SchemeKind::Dwb || k == SchemeKind::DwbS; }
inline bool is_simplified(SchemeKind k) { return k == SchemeKind::DwbS || k == SchemeKind::LaS; }

/// Ghost layers needed by a scheme of the given order.
int required_ghosts(SchemeKind kind, int order);

/// Default Gauss points for the energy matching at order m.
inline int default_quadrature_points(int order) { return std::max(1, (order + 2) / 2); }

/// Local gravity source s_i = rho^eq * g over the stencil of cell i together
/// with its antiderivative from x_i. Piecewise sources use each stencil
/// cell's own density and gravity polynomials; extrapolated sources reuse
/// those of cell i everywhere.
class LocalSource1D {
 public:
  static constexpr int kMaxRadius = 2;
  static constexpr int kSlots = 2 * kMaxRadius + 1;

  int radius() const { return r_; }
  bool is_piecewise() const { return piecewise_; }
  double center() const { return xc_; }
  double dx() const { return dx_; }

  /// s on cell i+off.
  const Poly1d& segment(int off) const { return seg_[slot(off)]; }
  double value(int off, double x) const { return seg_[slot(off)](x); }
  /// Equilibrium density on cell i+off.
  double density(int off, double x) const { return rho_[slot(off)](x); }
  /// Integral of s from x_i to x, with x taken in cell i+off.
  double integral(int off, double x) const {
    const int k = slot(off);
    return offset_[k] + anti_[k](x);
  }
  /// Integral of s over cell i+off.
  double cell_integral(int off) const {
    const double a = xc_ + (off - 0.5) * dx_, b = xc_ + (off + 0.5) * dx_;
    return integral(off, b) - integral(off, a);
  }

 private:
  friend LocalSource1D build_source_dwb(std::span<const Poly1d>, std::span<const Poly1d>, double, double);
  friend LocalSource1D build_source_la(const Poly1d&, const Poly1d&, int, double, double);

  int slot(int off) const { return piecewise_ ? off + r_ : r_; }

  int r_ = 0;
  bool piecewise_ = false;
  double xc_ = 0.0, dx_ = 1.0;
  std::array<Poly1d, kSlots> rho_{};
  std::array<Poly1d, kSlots> seg_{};
  std::array<Poly1d, kSlots> anti_{};
  std::array<double, kSlots> offset_{};
};

/// rho[k], g[k] for k = 0..2r are the polynomials of cells i-r..i+r.
LocalSource1D build_source_dwb(std::span<const Poly1d> rho, std::span<const Poly1d> g, double center, double dx);
LocalSource1D build_source_la(const Poly1d& rho, const Poly1d& g, int radius, double center, double dx);

/// Local hydrostatic profile p_eq(x) = p0 + int_{x_i}^x s.
struct EquilibriumProfile1D {
  int cell = 0;
  LocalSource1D source;
  double p0 = 0.0;

  double pressure(int off, double x) const { return p0 + source.integral(off, x); }
  double density(int off, double x) const { return source.density(off, x); }
  /// Mean of eps(rho_eq, p_eq) over cell i+off with the given rule.
  double internal_energy_average(int off, const EosModel& eos, const GaussRule& rule) const;
};

/// eps_hat = E_hat - mean((rho u)^2 / (2 rho)) by quadrature over the cell.
double estimate_internal_energy(double e_hat, const Poly1d& rho_rec, const Poly1d& mom_rec, const GaussRule& rule);

double anchor_pressure_ideal(const LocalSource1D& s, double eps_hat, double gamma, const GaussRule& rule);

struct NewtonResult {
  double p0;
  int iterations;
};

NewtonResult anchor_pressure_newton(const LocalSource1D& s, double eps_hat, double rho_hat, const EosModel& eos,
                                    const GaussRule& rule, double tol = 1e-13, int max_iter = 50, int cell = 0);

double anchor_pressure_simplified(const Poly1d& rho_rec, const Poly1d& mom_rec, const Poly1d& ene_rec,
                                  const EosModel& eos);

/// Reconstruction of one cell: density and momentum from the standard
/// reconstruction, energy as eps(rho_eq, p_eq) plus a reconstructed
/// perturbation. When `fallback` is set the energy is the standard
/// reconstruction held in `delta_e` and the profile is unused.
struct HydroRec1D {
  Poly1d rho, mom, delta_e;
  EquilibriumProfile1D profile;
  bool fallback = false;

  double energy(double x, const EosModel& eos) const {
    if (fallback) return delta_e(x);
    return eos.internal_energy(rho(x), profile.pressure(0, x)) + delta_e(x);
  }
  State1 evaluate(double x, const EosModel& eos) const { return {rho(x), mom(x), energy(x, eos)}; }
};

/// e_avg[0..2r] holds the energy averages of the stencil. `profile.p0`
/// must be set. Falls back to the standard reconstruction `e_std` if the
/// equilibrium pressure or density is non-positive at a needed point.
HydroRec1D hydrostatic_reconstruct_1d(const Cweno1D& cweno, std::span<const double> e_avg, const Poly1d& rho_rec,
                                      const Poly1d& mom_rec, const EquilibriumProfile1D& profile,
                                      const EosModel& eos, const GaussRule& rule, const Poly1d* e_std = nullptr);

/// True when f'(p) < 0 throughout a bracket around p0, i.e. the anchor
/// equation has a unique root. Works with any type exposing deps_dp.
template <class EosLike>
bool monotonicity_probe(const EquilibriumProfile1D& profile, const EosLike& eos, const GaussRule& rule,
                        int samples = 32) {
  const LocalSource1D& s = profile.source;
  double lowest = 0.0;
  for (int a = 0; a < rule.size(); ++a)
    lowest = std::min(lowest, s.integral(0, s.center() + rule.node(a) * s.dx()));
  const double lo = std::max(0.5 * profile.p0, -lowest + 1e-12 * std::abs(profile.p0));
  const double hi = 2.0 * profile.p0;
  for (int k = 0; k <= samples; ++k) {
    const double p = lo + (hi - lo) * k / samples;
    double fp = 0.0;
    for (int a = 0; a < rule.size(); ++a) {
      const double x = s.center() + rule.node(a) * s.dx();
      fp -= rule.weight(a) * eos.deps_dp(s.density(0, x), p + s.integral(0, x));
    }
    if (!(fp < 0.0)) return false;
  }
  return true;
}

/// 2D local profile: p_eq = p0 + P where P is the line integral of the
/// source from the cell centre.
struct EquilibriumProfile2D {
  int i = 0, j = 0;
  Poly2d rho;
  Poly2d potential;
  double p0 = 0.0;
  double pressure(double x, double y) const { return p0 + potential(x, y); }
};

EquilibriumProfile2D build_profile_2d(const Poly2d& rho_rec, const Poly2d& gx, const Poly2d& gy);

/// Tensor Gauss mean over the cell of half the kinetic energy density.
double estimate_internal_energy_2d(double e_hat, const Poly2d& rho, const Poly2d& mx, const Poly2d& my,
                                   const GaussRule& rule);

double anchor_pressure_ideal_2d(const EquilibriumProfile2D& profile, double eps_hat, double gamma);
NewtonResult anchor_pressure_newton_2d(const EquilibriumProfile2D& profile, double eps_hat, double rho_hat,
                                       const EosModel& eos, const GaussRule& rule, double tol = 1e-13,
                                       int max_iter = 50);
double anchor_pressure_simplified_2d(const Poly2d& rho, const Poly2d& mx, const Poly2d& my, const Poly2d& e,
                                     const EosModel& eos);

struct HydroRec2D {
  Poly2d rho, mx, my, delta_e;
  EquilibriumProfile2D profile;
  bool fallback = false;

  double energy(double x, double y, const EosModel& eos) const {
    if (fallback) return delta_e(x, y);
    return eos.internal_energy(rho(x, y), profile.pressure(x, y)) + delta_e(x, y);
  }
  State2 evaluate(double x, double y, const EosModel& eos) const {
    return {rho(x, y), mx(x, y), my(x, y), energy(x, y, eos)};
  }
};

/// e_avg is the 3x3 stencil of energy averages (layout as Cweno2D).
HydroRec2D hydrostatic_reconstruct_2d(const Cweno2D& cweno, std::span<const double> e_avg, const Poly2d& rho,
                                      const Poly2d& mx, const Poly2d& my, const EquilibriumProfile2D& profile,
                                      const EosModel& eos, const GaussRule& rule, const Poly2d* e_std = nullptr);

}  // namespace wbfv
