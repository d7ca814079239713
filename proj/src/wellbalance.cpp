#include "wbfv/wellbalance.hpp"

#include <cassert>
#include <cmath>
#include <limits>

namespace wbfv {

SchemeKind scheme_from_name(std::string_view name) {
  if (name == "standard" || name == "std") return SchemeKind::Standard;
  if (name == "dwb") return SchemeKind::Dwb;
  if (name == "dwb-s") return SchemeKind::DwbS;
  if (name == "la") return SchemeKind::La;
  if (name == "la-s") return SchemeKind::LaS;
  throw ConfigError("unknown scheme '" + std::string(name) + "'");
}

std::string scheme_name(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::Standard: return "standard";
    case SchemeKind::Dwb: return "dwb";
    case SchemeKind::DwbS: return "dwb-s";
    case SchemeKind::La: return "la";
    case SchemeKind::LaS: return "la-s";
  }
  return "?";
}

int required_ghosts(SchemeKind kind, int order) {
  const int r = (order - 1) / 2;
  if (is_piecewise(kind)) return order;
  return r + 1;
}

LocalSource1D build_source_dwb(std::span<const Poly1d> rho, std::span<const Poly1d> g, double center, double dx) {
  const int n = static_cast<int>(rho.size());
  if (n != static_cast<int>(g.size()) || n % 2 == 0 || n > LocalSource1D::kSlots)
    throw ConfigError("piecewise source needs an odd stencil of at most 5 cells");
  LocalSource1D s;
  s.r_ = (n - 1) / 2;
  s.piecewise_ = true;
  s.xc_ = center;
  s.dx_ = dx;
  for (int k = 0; k < n; ++k) {
    s.rho_[k] = rho[k];
    s.seg_[k] = rho[k] * g[k];
    s.anti_[k] = s.seg_[k].antiderivative();
  }
  const int r = s.r_;
  s.offset_[r] = 0.0;
  for (int k = r + 1; k < n; ++k) {
    const double face = center + (k - r - 0.5) * dx;
    s.offset_[k] = s.offset_[k - 1] + s.anti_[k - 1](face) - s.anti_[k](face);
  }
  for (int k = r - 1; k >= 0; --k) {
    const double face = center + (k - r + 0.5) * dx;
    s.offset_[k] = s.offset_[k + 1] + s.anti_[k + 1](face) - s.anti_[k](face);
  }
  return s;
}

LocalSource1D build_source_la(const Poly1d& rho, const Poly1d& g, int radius, double center, double dx) {
  if (radius < 0 || radius > LocalSource1D::kMaxRadius) throw ConfigError("unsupported stencil radius");
  LocalSource1D s;
  s.r_ = radius;
  s.piecewise_ = false;
  s.xc_ = center;
  s.dx_ = dx;
  s.rho_[radius] = rho;
  s.seg_[radius] = rho * g;
  s.anti_[radius] = s.seg_[radius].antiderivative();
  s.offset_[radius] = 0.0;
  return s;
}

double EquilibriumProfile1D::internal_energy_average(int off, const EosModel& eos, const GaussRule& rule) const {
  const double xc = source.center() + off * source.dx();
  double acc = 0.0;
  for (int a = 0; a < rule.size(); ++a) {
    const double x = xc + rule.node(a) * source.dx();
    acc += rule.weight(a) * eos.internal_energy(density(off, x), pressure(off, x));
  }
  return acc;
}

double estimate_internal_energy(double e_hat, const Poly1d& rho_rec, const Poly1d& mom_rec, const GaussRule& rule) {
  double ke = 0.0;
  for (int a = 0; a < rule.size(); ++a) {
    const double xi = rule.node(a);
    const double m = mom_rec.eval_local(xi);
    ke += rule.weight(a) * 0.5 * m * m / rho_rec.eval_local(xi);
  }
  return e_hat - ke;
}

double anchor_pressure_ideal(const LocalSource1D& s, double eps_hat, double gamma, const GaussRule& rule) {
  double acc = 0.0;
  for (int a = 0; a < rule.size(); ++a) acc += rule.weight(a) * s.integral(0, s.center() + rule.node(a) * s.dx());
  return (gamma - 1.0) * eps_hat - acc;
}

NewtonResult anchor_pressure_newton(const LocalSource1D& s, double eps_hat, double rho_hat, const EosModel& eos,
                                    const GaussRule& rule, double tol, int max_iter, int cell) {
  double xs[GaussRule::kMaxPoints], is[GaussRule::kMaxPoints], rs[GaussRule::kMaxPoints];
  double lowest = std::numeric_limits<double>::infinity();
  for (int a = 0; a < rule.size(); ++a) {
    xs[a] = s.center() + rule.node(a) * s.dx();
    is[a] = s.integral(0, xs[a]);
    rs[a] = s.density(0, xs[a]);
    lowest = std::min(lowest, is[a]);
  }
  const double floor = -lowest;  // p0 must exceed this for p_eq > 0 at all nodes
  double p = eos.pressure(rho_hat, eps_hat);
  if (!(p > floor)) p = floor + std::max(std::abs(floor), 1.0) * 1e-3;
  for (int it = 0; it <= max_iter; ++it) {
    double f = eps_hat, fp = 0.0;
    for (int a = 0; a < rule.size(); ++a) {
      f -= rule.weight(a) * eos.internal_energy(rs[a], p + is[a]);
      fp -= rule.weight(a) * eos.deps_dp(rs[a], p + is[a]);
    }
    const double step = f / fp;
    if (!std::isfinite(step)) break;
    if (std::abs(step) < tol) return {p - step, it};
    double next = p - step;
    if (!(next > floor)) next = 0.5 * (p + floor);
    p = next;
  }
  throw EquilibriumError("anchor pressure Newton iteration did not converge", cell);
}

double anchor_pressure_simplified(const Poly1d& rho_rec, const Poly1d& mom_rec, const Poly1d& ene_rec,
                                  const EosModel& eos) {
  const double rho = rho_rec.coeff(0), m = mom_rec.coeff(0);
  return eos.pressure(rho, ene_rec.coeff(0) - 0.5 * m * m / rho);
}

HydroRec1D hydrostatic_reconstruct_1d(const Cweno1D& cweno, std::span<const double> e_avg, const Poly1d& rho_rec,
                                      const Poly1d& mom_rec, const EquilibriumProfile1D& profile,
                                      const EosModel& eos, const GaussRule& rule, const Poly1d* e_std) {
  const int r = cweno.radius();
  const double xc = rho_rec.anchor(), dx = rho_rec.scale();
  HydroRec1D out;
  out.rho = rho_rec;
  out.mom = mom_rec;
  out.profile = profile;

  bool ok = profile.pressure(0, xc - 0.5 * dx) > 0.0 && profile.pressure(0, xc + 0.5 * dx) > 0.0 &&
            rho_rec(xc - 0.5 * dx) > 0.0 && rho_rec(xc + 0.5 * dx) > 0.0;
  double delta[Cweno1D::kMaxOrder];
  for (int off = -r; off <= r && ok; ++off) {
    double acc = 0.0;
    for (int a = 0; a < rule.size(); ++a) {
      const double x = xc + (off + rule.node(a)) * dx;
      const double p = profile.pressure(off, x), rho = profile.density(off, x);
      if (!(p > 0.0) || !(rho > 0.0)) {
        ok = false;
        break;
      }
      acc += rule.weight(a) * eos.internal_energy(rho, p);
    }
    delta[off + r] = e_avg[off + r] - acc;
  }
  if (!ok) {
    out.fallback = true;
    out.delta_e = e_std ? *e_std : cweno.reconstruct(e_avg, xc, dx);
    return out;
  }
  out.delta_e = cweno.reconstruct(std::span<const double>(delta, 2 * r + 1), xc, dx);
  return out;
}

EquilibriumProfile2D build_profile_2d(const Poly2d& rho_rec, const Poly2d& gx, const Poly2d& gy) {
  EquilibriumProfile2D p;
  p.rho = rho_rec;
  p.potential = radial_potential(rho_rec * gx, rho_rec * gy);
  return p;
}

namespace {

template <typename F>
double tensor_average(const GaussRule& rule, double xc, double yc, double dx, double dy, F&& f) {
  double acc = 0.0;
  for (int a = 0; a < rule.size(); ++a) {
    const double x = xc + rule.node(a) * dx;
    double row = 0.0;
    for (int b = 0; b < rule.size(); ++b) row += rule.weight(b) * f(x, yc + rule.node(b) * dy);
    acc += rule.weight(a) * row;
  }
  return acc;
}

double cell_mean(const Poly2d& p, int di, int dj) {
  const auto& a = p.anchor();
  const auto& h = p.scale();
  const double x0 = a[0] + (di - 0.5) * h[0], y0 = a[1] + (dj - 0.5) * h[1];
  return p.average(x0, x0 + h[0], y0, y0 + h[1]);
}

}  // namespace

double estimate_internal_energy_2d(double e_hat, const Poly2d& rho, const Poly2d& mx, const Poly2d& my,
                                   const GaussRule& rule) {
  const auto& c = rho.anchor();
  const auto& h = rho.scale();
  const double ke = tensor_average(rule, c[0], c[1], h[0], h[1], [&](double x, double y) {
    const double m1 = mx(x, y), m2 = my(x, y);
    return 0.5 * (m1 * m1 + m2 * m2) / rho(x, y);
  });
  return e_hat - ke;
}

double anchor_pressure_ideal_2d(const EquilibriumProfile2D& profile, double eps_hat, double gamma) {
  return (gamma - 1.0) * eps_hat - cell_mean(profile.potential, 0, 0);
}

NewtonResult anchor_pressure_newton_2d(const EquilibriumProfile2D& profile, double eps_hat, double rho_hat,
                                       const EosModel& eos, const GaussRule& rule, double tol, int max_iter) {
  const auto& c = profile.rho.anchor();
  const auto& h = profile.rho.scale();
  const int n = rule.size();
  double pot[GaussRule::kMaxPoints][GaussRule::kMaxPoints], rho[GaussRule::kMaxPoints][GaussRule::kMaxPoints];
  double lowest = std::numeric_limits<double>::infinity();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const double x = c[0] + rule.node(a) * h[0], y = c[1] + rule.node(b) * h[1];
      pot[a][b] = profile.potential(x, y);
      rho[a][b] = profile.rho(x, y);
      lowest = std::min(lowest, pot[a][b]);
    }
  const double floor = -lowest;
  double p = eos.pressure(rho_hat, eps_hat);
  if (!(p > floor)) p = floor + std::max(std::abs(floor), 1.0) * 1e-3;
  for (int it = 0; it <= max_iter; ++it) {
    double f = eps_hat, fp = 0.0;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const double w = rule.weight(a) * rule.weight(b);
        f -= w * eos.internal_energy(rho[a][b], p + pot[a][b]);
        fp -= w * eos.deps_dp(rho[a][b], p + pot[a][b]);
      }
    const double step = f / fp;
    if (!std::isfinite(step)) break;
    if (std::abs(step) < tol) return {p - step, it};
    double next = p - step;
    if (!(next > floor)) next = 0.5 * (p + floor);
    p = next;
  }
  throw EquilibriumError("2D anchor pressure Newton iteration did not converge", profile.i);
}

double anchor_pressure_simplified_2d(const Poly2d& rho, const Poly2d& mx, const Poly2d& my, const Poly2d& e,
                                     const EosModel& eos) {
  const double r = rho.coeff(0, 0), m1 = mx.coeff(0, 0), m2 = my.coeff(0, 0);
  return eos.pressure(r, e.coeff(0, 0) - 0.5 * (m1 * m1 + m2 * m2) / r);
}

HydroRec2D hydrostatic_reconstruct_2d(const Cweno2D& cweno, std::span<const double> e_avg, const Poly2d& rho,
                                      const Poly2d& mx, const Poly2d& my, const EquilibriumProfile2D& profile,
                                      const EosModel& eos, const GaussRule& rule, const Poly2d* e_std) {
  HydroRec2D out;
  out.rho = rho;
  out.mx = mx;
  out.my = my;
  out.profile = profile;
  const auto& c = rho.anchor();
  const double dx = rho.scale()[0], dy = rho.scale()[1];
  const int rad = cweno.radius();

  bool ok = true;
  double delta[9];
  for (int dj = -1; dj <= 1 && ok; ++dj)
    for (int di = -1; di <= 1 && ok; ++di) {
      const int k = (dj + 1) * 3 + (di + 1);
      if (std::abs(di) > rad || std::abs(dj) > rad) {
        delta[k] = 0.0;
        continue;
      }
      const double xc = c[0] + di * dx, yc = c[1] + dj * dy;
      for (int a = 0; a < rule.size() && ok; ++a)
        for (int b = 0; b < rule.size(); ++b) {
          const double x = xc + rule.node(a) * dx, y = yc + rule.node(b) * dy;
          if (!(profile.pressure(x, y) > 0.0) || !(rho(x, y) > 0.0)) {
            ok = false;
            break;
          }
        }
      if (!ok) break;
      double eq;
      if (eos.is_ideal()) {
        eq = (profile.p0 + cell_mean(profile.potential, di, dj)) / (eos.gamma() - 1.0);
      } else {
        eq = tensor_average(rule, xc, yc, dx, dy,
                            [&](double x, double y) { return eos.internal_energy(rho(x, y), profile.pressure(x, y)); });
      }
      delta[k] = e_avg[k] - eq;
    }
  if (!ok) {
    out.fallback = true;
    out.delta_e = e_std ? *e_std : cweno.reconstruct(e_avg, c[0], c[1], dx, dy);
    return out;
  }
  out.delta_e = cweno.reconstruct(std::span<const double>(delta, 9), c[0], c[1], dx, dy);
  return out;
}

}  // namespace wbfv
