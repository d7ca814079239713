#pragma once

#include "wbfv/core/polynomial.hpp"
#include "wbfv/core/types.hpp"
#include "wbfv/eos.hpp"

#include <cstdint>
#include <string>
#include <string_view>

namespace wbfv {

enum class FluxKind { Roe, Hllc, Rusanov };

FluxKind flux_from_name(std::string_view name);
std::string flux_name(FluxKind kind);

struct FluxOptions {
  FluxKind kind = FluxKind::Roe;
  bool entropy_fix = false;
};

/// Primitive view of a conserved state along direction `dir`.
struct Primitive {
  double rho, un, ut, p, eps;
};

template <int Dim>
Primitive to_primitive(const StateT<double, Dim>& q, const EosModel& eos, int dir);

template <int Dim>
StateT<double, Dim> from_primitive(double rho, double u, double v, double p, const EosModel& eos);

template <int Dim>
StateT<double, Dim> physical_flux(const StateT<double, Dim>& q, const EosModel& eos, int dir);

template <int Dim>
StateT<double, Dim> roe_flux(const StateT<double, Dim>& left, const StateT<double, Dim>& right,
                             const EosModel& eos, int dir, bool entropy_fix = false);

template <int Dim>
StateT<double, Dim> hllc_flux(const StateT<double, Dim>& left, const StateT<double, Dim>& right,
                              const EosModel& eos, int dir);

template <int Dim>
StateT<double, Dim> rusanov_flux(const StateT<double, Dim>& left, const StateT<double, Dim>& right,
                                 const EosModel& eos, int dir);

template <int Dim>
StateT<double, Dim> numerical_flux(const FluxOptions& opt, const StateT<double, Dim>& left,
                                   const StateT<double, Dim>& right, const EosModel& eos, int dir) {
  switch (opt.kind) {
    case FluxKind::Roe: return roe_flux<Dim>(left, right, eos, dir, opt.entropy_fix);
    case FluxKind::Hllc: return hllc_flux<Dim>(left, right, eos, dir);
    case FluxKind::Rusanov: return rusanov_flux<Dim>(left, right, eos, dir);
  }
  return {};
}

/// Flux through a reflecting wall. `side` is -1 for a wall on the low end
/// of the axis and +1 for the high end; `interior` is the reconstructed
/// state at the wall.
template <int Dim>
StateT<double, Dim> wall_boundary_flux(const FluxOptions& opt, const StateT<double, Dim>& interior,
                                       const EosModel& eos, int dir, int side);

struct ContactReport {
  int trials = 0;
  int failures = 0;
  double max_deviation = 0.0;
  bool passed() const { return trials > 0 && failures == 0; }
};

/// Random stationary contacts (rho_L, rho_R, p); the flux must equal (0, p, 0).
/// Deviations are relative to rho*c, p and (E + p)*c respectively.
ContactReport contact_property_check(const FluxOptions& opt, const EosModel& eos, int trials,
                                     std::uint64_t seed, double tol = 1e-13);

/// Cell average of the gravity source: (0, int s, int (rho u) g) / dx where
/// s is the cell's own momentum source polynomial.
State1 source_average_1d(const Poly1d& momentum_source, const Poly1d& mom_rec, const Poly1d& g_int,
                         double x_left, double x_right);

/// Same in 2D over the rectangle of the cell.
State2 source_average_2d(const Poly2d& rho_rec, const Poly2d& mx_rec, const Poly2d& my_rec, const Poly2d& gx,
                         const Poly2d& gy, double x0, double x1, double y0, double y1);

}  // namespace wbfv
