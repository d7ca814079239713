#include "wbfv/physics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace wbfv {
namespace {

template <int Dim>
constexpr int normal_index(int dir) {
  return 1 + dir;
}
template <int Dim>
constexpr int tangent_index(int dir) {
  return Dim == 2 ? 2 - dir : -1;
}

[[noreturn]] void bad_state(const char* where, const Primitive& s) {
  std::ostringstream os;
  os << where << ": non-physical state rho=" << s.rho << " p=" << s.p;
  throw FluxError(os.str());
}

double sound_speed_unchecked(const EosModel& eos, double rho, double p) {
  return std::sqrt(eos.gamma1(rho, p) * p / rho);
}

}  // namespace

FluxKind flux_from_name(std::string_view name) {
  if (name == "roe") return FluxKind::Roe;
  if (name == "hllc") return FluxKind::Hllc;
  if (name == "rusanov") return FluxKind::Rusanov;
  throw ConfigError("unknown flux '" + std::string(name) + "'");
}

std::string flux_name(FluxKind kind) {
  switch (kind) {
    case FluxKind::Roe: return "roe";
    case FluxKind::Hllc: return "hllc";
    case FluxKind::Rusanov: return "rusanov";
  }
  return "?";
}

template <int Dim>
Primitive to_primitive(const StateT<double, Dim>& q, const EosModel& eos, int dir) {
  Primitive s;
  s.rho = q[0];
  const double inv = 1.0 / q[0];
  s.un = q[normal_index<Dim>(dir)] * inv;
  s.ut = Dim == 2 ? q[tangent_index<Dim>(dir)] * inv : 0.0;
  s.eps = q[Dim + 1] - 0.5 * q[0] * (s.un * s.un + s.ut * s.ut);
  if (!(s.rho > 0.0) || !(s.eps > 0.0)) {
    s.p = eos.is_ideal() ? (eos.gamma() - 1.0) * s.eps : 0.0;
    return s;
  }
  s.p = eos.pressure(s.rho, s.eps);
  return s;
}

template <int Dim>
StateT<double, Dim> from_primitive(double rho, double u, double v, double p, const EosModel& eos) {
  StateT<double, Dim> q;
  q[0] = rho;
  q[1] = rho * u;
  double ke = u * u;
  if constexpr (Dim == 2) {
    q[2] = rho * v;
    ke += v * v;
  }
  q[Dim + 1] = eos.internal_energy(rho, p) + 0.5 * rho * ke;
  return q;
}

namespace {

template <int Dim>
StateT<double, Dim> flux_of(const StateT<double, Dim>& q, const Primitive& s, int dir) {
  StateT<double, Dim> f;
  const int n = normal_index<Dim>(dir);
  f[0] = q[0] * s.un;
  f[1] = q[1] * s.un;
  if constexpr (Dim == 2) f[2] = q[2] * s.un;
  f[n] += s.p;
  f[Dim + 1] = (q[Dim + 1] + s.p) * s.un;
  return f;
}

}  // namespace

template <int Dim>
StateT<double, Dim> physical_flux(const StateT<double, Dim>& q, const EosModel& eos, int dir) {
  return flux_of<Dim>(q, to_primitive<Dim>(q, eos, dir), dir);
}

template <int Dim>
StateT<double, Dim> roe_flux(const StateT<double, Dim>& left, const StateT<double, Dim>& right,
                             const EosModel& eos, int dir, bool entropy_fix) {
  const Primitive l = to_primitive<Dim>(left, eos, dir);
  const Primitive r = to_primitive<Dim>(right, eos, dir);
  if (!(l.rho > 0.0) || !(l.p > 0.0)) bad_state("roe_flux left", l);
  if (!(r.rho > 0.0) || !(r.p > 0.0)) bad_state("roe_flux right", r);

  const double sl = std::sqrt(l.rho), sr = std::sqrt(r.rho);
  const double wl = sl / (sl + sr), wr = 1.0 - wl;
  const double rho = sl * sr;
  const double un = wl * l.un + wr * r.un;
  const double ut = wl * l.ut + wr * r.ut;
  const double hl = (left[Dim + 1] + l.p) / l.rho, hr = (right[Dim + 1] + r.p) / r.rho;
  const double h = wl * hl + wr * hr;
  const double q2 = un * un + ut * ut;

  double c2, contact_e;
  if (eos.is_ideal()) {
    c2 = (eos.gamma() - 1.0) * (h - 0.5 * q2);
    contact_e = 0.5 * q2;
  } else {
    const double rbar = 0.5 * (l.rho + r.rho), pbar = 0.5 * (l.p + r.p);
    c2 = eos.gamma1(rbar, pbar) * pbar / rbar;
    contact_e = 0.5 * q2 + eos.deps_drho(rbar, pbar);
  }
  if (!(c2 > 0.0)) throw FluxError("roe_flux: non-positive averaged sound speed");
  const double c = std::sqrt(c2);

  const double dp = r.p - l.p, du = r.un - l.un, drho = r.rho - l.rho, dut = r.ut - l.ut;
  const double a1 = (dp - rho * c * du) / (2.0 * c2);
  const double a3 = (dp + rho * c * du) / (2.0 * c2);
  const double a2 = drho - dp / c2;

  double lam1 = std::abs(un - c), lam2 = std::abs(un), lam3 = std::abs(un + c);
  if (entropy_fix) {
    auto fix = [](double lam, double ll, double lr) {
      const double d = std::max({0.0, lam - ll, lr - lam});
      const double a = std::abs(lam);
      return a < d ? 0.5 * (lam * lam + d * d) / d : a;
    };
    const double cl = sound_speed_unchecked(eos, l.rho, l.p), cr = sound_speed_unchecked(eos, r.rho, r.p);
    lam1 = fix(un - c, l.un - cl, r.un - cr);
    lam3 = fix(un + c, l.un + cl, r.un + cr);
  }

  StateT<double, Dim> f = 0.5 * (flux_of<Dim>(left, l, dir) + flux_of<Dim>(right, r, dir));
  const int n = normal_index<Dim>(dir);
  const double k1 = 0.5 * lam1 * a1, k2 = 0.5 * lam2 * a2, k3 = 0.5 * lam3 * a3;
  f[0] -= k1 + k2 + k3;
  f[n] -= k1 * (un - c) + k2 * un + k3 * (un + c);
  f[Dim + 1] -= k1 * (h - un * c) + k2 * contact_e + k3 * (h + un * c);
  if constexpr (Dim == 2) {
    const int t = tangent_index<Dim>(dir);
    const double kt = 0.5 * lam2 * rho * dut;
    f[t] -= (k1 + k2 + k3) * ut + kt;
    f[Dim + 1] -= kt * ut;
  }
  return f;
}

template <int Dim>
StateT<double, Dim> hllc_flux(const StateT<double, Dim>& left, const StateT<double, Dim>& right,
                              const EosModel& eos, int dir) {
  const Primitive l = to_primitive<Dim>(left, eos, dir);
  const Primitive r = to_primitive<Dim>(right, eos, dir);
  if (!(l.rho > 0.0) || !(l.p > 0.0)) bad_state("hllc_flux left", l);
  if (!(r.rho > 0.0) || !(r.p > 0.0)) bad_state("hllc_flux right", r);
  const double cl = sound_speed_unchecked(eos, l.rho, l.p), cr = sound_speed_unchecked(eos, r.rho, r.p);

  // Einfeldt bounds from Roe-averaged velocity and an averaged sound speed.
  const double sl_ = std::sqrt(l.rho), sr_ = std::sqrt(r.rho);
  const double wl = sl_ / (sl_ + sr_), wr = 1.0 - wl;
  const double ubar = wl * l.un + wr * r.un;
  const double cbar = std::sqrt(wl * cl * cl + wr * cr * cr + 0.5 * wl * wr * (r.un - l.un) * (r.un - l.un));
  const double s_l = std::min(l.un - cl, ubar - cbar);
  const double s_r = std::max(r.un + cr, ubar + cbar);

  const StateT<double, Dim> fl = flux_of<Dim>(left, l, dir);
  const StateT<double, Dim> fr = flux_of<Dim>(right, r, dir);
  if (s_l >= 0.0) return fl;
  if (s_r <= 0.0) return fr;

  const double ml = l.rho * (s_l - l.un), mr = r.rho * (s_r - r.un);
  const double s_star = (r.p - l.p + l.rho * l.un * (s_l - l.un) - r.rho * r.un * (s_r - r.un)) / (ml - mr);

  auto star_state = [&](const StateT<double, Dim>& q, const Primitive& s, double sk) {
    const double fac = s.rho * (sk - s.un) / (sk - s_star);
    StateT<double, Dim> qs;
    qs[0] = fac;
    qs[normal_index<Dim>(dir)] = fac * s_star;
    if constexpr (Dim == 2) qs[tangent_index<Dim>(dir)] = fac * s.ut;
    qs[Dim + 1] = fac * (q[Dim + 1] / s.rho + (s_star - s.un) * (s_star + s.p / (s.rho * (sk - s.un))));
    return qs;
  };
  if (s_star >= 0.0) return fl + s_l * (star_state(left, l, s_l) - left);
  return fr + s_r * (star_state(right, r, s_r) - right);
}

template <int Dim>
StateT<double, Dim> rusanov_flux(const StateT<double, Dim>& left, const StateT<double, Dim>& right,
                                 const EosModel& eos, int dir) {
  const Primitive l = to_primitive<Dim>(left, eos, dir);
  const Primitive r = to_primitive<Dim>(right, eos, dir);
  if (!(l.rho > 0.0) || !(l.p > 0.0)) bad_state("rusanov_flux left", l);
  if (!(r.rho > 0.0) || !(r.p > 0.0)) bad_state("rusanov_flux right", r);
  const double smax = std::max(std::abs(l.un) + sound_speed_unchecked(eos, l.rho, l.p),
                               std::abs(r.un) + sound_speed_unchecked(eos, r.rho, r.p));
  return 0.5 * (flux_of<Dim>(left, l, dir) + flux_of<Dim>(right, r, dir)) - 0.5 * smax * (right - left);
}

template <int Dim>
StateT<double, Dim> wall_boundary_flux(const FluxOptions& opt, const StateT<double, Dim>& interior,
                                       const EosModel& eos, int dir, int side) {
  StateT<double, Dim> mirror = interior;
  mirror[normal_index<Dim>(dir)] = -interior[normal_index<Dim>(dir)];
  return side > 0 ? numerical_flux<Dim>(opt, interior, mirror, eos, dir)
                  : numerical_flux<Dim>(opt, mirror, interior, eos, dir);
}

ContactReport contact_property_check(const FluxOptions& opt, const EosModel& eos, int trials,
                                     std::uint64_t seed, double tol) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> logu(-3.0, 3.0);
  ContactReport rep;
  for (int k = 0; k < trials; ++k) {
    const double rl = std::exp(logu(rng)), rr = std::exp(logu(rng)), p = std::exp(logu(rng));
    const State1 ql = from_primitive<1>(rl, 0.0, 0.0, p, eos);
    const State1 qr = from_primitive<1>(rr, 0.0, 0.0, p, eos);
    const State1 f = numerical_flux<1>(opt, ql, qr, eos, 0);
    const double pl = to_primitive<1>(ql, eos, 0).p;
    // Mass and energy fluxes are measured against rho*c and (E + p)*c.
    const double c = std::max(eos.sound_speed(rl, p), eos.sound_speed(rr, p));
    const double mass = std::max(rl, rr) * c, energy = (std::max(ql[2], qr[2]) + p) * c;
    const double dev = std::max({std::abs(f[0]) / mass, std::abs(f[1] - pl) / pl, std::abs(f[2]) / energy});
    rep.max_deviation = std::max(rep.max_deviation, dev);
    ++rep.trials;
    if (!(dev <= tol)) ++rep.failures;
  }
  return rep;
}

State1 source_average_1d(const Poly1d& momentum_source, const Poly1d& mom_rec, const Poly1d& g_int,
                         double x_left, double x_right) {
  const double dx = x_right - x_left;
  State1 s;
  s[0] = 0.0;
  s[1] = momentum_source.integrate(x_left, x_right) / dx;
  s[2] = (mom_rec * g_int).integrate(x_left, x_right) / dx;
  return s;
}

State2 source_average_2d(const Poly2d& rho_rec, const Poly2d& mx_rec, const Poly2d& my_rec, const Poly2d& gx,
                         const Poly2d& gy, double x0, double x1, double y0, double y1) {
  State2 s;
  s[0] = 0.0;
  s[1] = (rho_rec * gx).average(x0, x1, y0, y1);
  s[2] = (rho_rec * gy).average(x0, x1, y0, y1);
  s[3] = (mx_rec * gx + my_rec * gy).average(x0, x1, y0, y1);
  return s;
}

#define WBFV_INSTANTIATE(D)                                                                                   \
  template Primitive to_primitive<D>(const StateT<double, D>&, const EosModel&, int);                        \
  template StateT<double, D> from_primitive<D>(double, double, double, double, const EosModel&);             \
  template StateT<double, D> physical_flux<D>(const StateT<double, D>&, const EosModel&, int);               \
  template StateT<double, D> roe_flux<D>(const StateT<double, D>&, const StateT<double, D>&, const EosModel&, \
                                         int, bool);                                                          \
  template StateT<double, D> hllc_flux<D>(const StateT<double, D>&, const StateT<double, D>&,                \
                                          const EosModel&, int);                                              \
  template StateT<double, D> rusanov_flux<D>(const StateT<double, D>&, const StateT<double, D>&,             \
                                             const EosModel&, int);                                           \
  template StateT<double, D> wall_boundary_flux<D>(const FluxOptions&, const StateT<double, D>&,             \
                                                   const EosModel&, int, int);

WBFV_INSTANTIATE(1)
WBFV_INSTANTIATE(2)
#undef WBFV_INSTANTIATE

}  // namespace wbfv
