#include "wbfv/solver.hpp"

#include <cmath>
#include <sstream>

namespace wbfv {
namespace {

bool admissible(const State1& q) { return q[0] > 0.0 && q[2] - 0.5 * q[1] * q[1] / q[0] > 0.0; }

}  // namespace

Solver1D::Solver1D(const Grid1D& grid, const SchemeConfig& scheme, const EosModel& eos, Gravity gravity,
                   const BoundarySpec1D& bc)
    : grid_(grid),
      scheme_(scheme),
      eos_(eos),
      gravity_(std::move(gravity)),
      bc_(bc),
      cweno_(scheme.order, scheme.eps_factor),
      rule_(scheme.quadrature()),
      r_(cweno_.radius()) {
  bc_.validate();
  grid_.require_ghosts(scheme_.ghosts());
  if (!gravity_) gravity_ = [](double) { return 0.0; };
  const int n = grid_.n_total();
  const double dx = grid_.dx();
  const GravityInterp1D interp(scheme_.order);
  g_int_.resize(n);
  std::vector<double> g(2 * r_ + 1);
  for (int i = -grid_.n_ghost(); i < grid_.n_cells() + grid_.n_ghost(); ++i) {
    for (int k = -r_; k <= r_; ++k) g[k + r_] = gravity_(grid_.center(i + k));
    g_int_[grid_.storage(i)] = interp.interpolate(g, grid_.center(i), dx);
  }
  rho_rec_.resize(n);
  mom_rec_.resize(n);
  ene_rec_.resize(n);
  face_l_.resize(n);
  face_r_.resize(n);
  src_.resize(n);
  flux_.resize(grid_.n_cells() + 1);
}

Poly1d Solver1D::standard_reconstruction(const Field& q, int comp, int i) const {
  double avg[Cweno1D::kMaxOrder], c[Cweno1D::kMaxOrder];
  const int base = grid_.storage(i) - r_;
  for (int k = 0; k <= 2 * r_; ++k) avg[k] = q.data()(comp, base + k);
  cweno_.reconstruct_local(avg, grid_.dx(), c);
  return Poly1d::from_range(c, 2 * r_ + 1, grid_.center(i), grid_.dx());
}

void Solver1D::compute_standard(const Field& q, int lo, int hi, bool energy) {
  for (int k = lo; k <= hi; ++k) {
    const int s = grid_.storage(k);
    rho_rec_[s] = standard_reconstruction(q, 0, k);
    mom_rec_[s] = standard_reconstruction(q, 1, k);
    if (energy) ene_rec_[s] = standard_reconstruction(q, 2, k);
  }
}

LocalSource1D Solver1D::local_source(int i) const {
  const int s = grid_.storage(i);
  if (is_piecewise(scheme_.kind))
    return build_source_dwb(std::span<const Poly1d>(&rho_rec_[s - r_], 2 * r_ + 1),
                            std::span<const Poly1d>(&g_int_[s - r_], 2 * r_ + 1), grid_.center(i), grid_.dx());
  return build_source_la(rho_rec_[s], g_int_[s], r_, grid_.center(i), grid_.dx());
}

double Solver1D::anchor(const LocalSource1D& src, double eps_hat, double rho_hat, int i, const Poly1d* e_std) const {
  const int s = grid_.storage(i);
  if (e_std) return anchor_pressure_simplified(rho_rec_[s], mom_rec_[s], *e_std, eos_);
  if (eos_.is_ideal()) return anchor_pressure_ideal(src, eps_hat, eos_.gamma(), rule_);
  return anchor_pressure_newton(src, eps_hat, rho_hat, eos_, rule_, scheme_.newton_tol, scheme_.newton_max_iter, i)
      .p0;
}

HydroRec1D Solver1D::reconstruct_wb(const Field& q, int i) {
  const int s = grid_.storage(i);
  const LocalSource1D src = local_source(i);
  const double eps_hat = estimate_internal_energy(q.data()(2, s), rho_rec_[s], mom_rec_[s], rule_);
  const Poly1d* e_std = nullptr;
  if (is_simplified(scheme_.kind)) {
    ene_rec_[s] = standard_reconstruction(q, 2, i);
    e_std = &ene_rec_[s];
  }
  EquilibriumProfile1D profile{i, src, anchor(src, eps_hat, q.data()(0, s), i, e_std)};
  double e_avg[Cweno1D::kMaxOrder];
  for (int k = 0; k <= 2 * r_; ++k) e_avg[k] = q.data()(2, s - r_ + k);
  HydroRec1D rec = hydrostatic_reconstruct_1d(cweno_, std::span<const double>(e_avg, 2 * r_ + 1), rho_rec_[s],
                                              mom_rec_[s], profile, eos_, rule_, e_std);
  if (rec.fallback) ++stats_.fallbacks;
  return rec;
}

HydroRec1D Solver1D::reconstruct_cell(const Field& q, int i) {
  const int reach = is_piecewise(scheme_.kind) ? r_ : 0;
  compute_standard(q, i - reach, i + reach, scheme_.kind == SchemeKind::Standard);
  if (scheme_.kind == SchemeKind::Standard) {
    const int s = grid_.storage(i);
    HydroRec1D rec;
    rec.rho = rho_rec_[s];
    rec.mom = mom_rec_[s];
    rec.delta_e = ene_rec_[s];
    rec.fallback = true;
    return rec;
  }
  return reconstruct_wb(q, i);
}

void Solver1D::rhs(Field& q, Field& out) {
  ++stats_.rhs_calls;
  fill_ghosts(q);
  const int n = grid_.n_cells();
  const double dx = grid_.dx();
  const bool wall_l = bc_.left == BoundaryKind::SolidWall, wall_r = bc_.right == BoundaryKind::SolidWall;
  const int lo = wall_l ? 0 : -1, hi = wall_r ? n - 1 : n;
  const bool standard = scheme_.kind == SchemeKind::Standard;
  const int reach = is_piecewise(scheme_.kind) ? r_ : 0;
  compute_standard(q, lo - reach, hi + reach, standard);

  for (int i = lo; i <= hi; ++i) {
    const int s = grid_.storage(i);
    const double xl = grid_.interface(i), xr = grid_.interface(i + 1);
    if (standard) {
      face_l_[s] = {rho_rec_[s](xl), mom_rec_[s](xl), ene_rec_[s](xl)};
      face_r_[s] = {rho_rec_[s](xr), mom_rec_[s](xr), ene_rec_[s](xr)};
    } else {
      const HydroRec1D rec = reconstruct_wb(q, i);
      face_l_[s] = rec.evaluate(xl, eos_);
      face_r_[s] = rec.evaluate(xr, eos_);
    }
    // First-order fallback where the reconstruction leaves the admissible set.
    const bool first_order = !admissible(face_l_[s]) || !admissible(face_r_[s]);
    if (first_order) {
      face_l_[s] = face_r_[s] = q.data().col(s);
      ++stats_.fallbacks;
    }
    if (i >= 0 && i < n) {
      const Poly1d& g = g_int_[s];
      if (first_order) {
        const Poly1d rho0 = Poly1d::constant(q.data()(0, s), grid_.center(i), dx);
        src_[s] = source_average_1d(rho0 * g, Poly1d::constant(q.data()(1, s), grid_.center(i), dx), g, xl, xr);
      } else {
        src_[s] = source_average_1d(rho_rec_[s] * g, mom_rec_[s], g, xl, xr);
      }
    }
  }

  for (int f = 0; f <= n; ++f) {
    if (f == 0 && wall_l)
      flux_[f] = wall_boundary_flux<1>(scheme_.flux, face_l_[grid_.storage(0)], eos_, 0, -1);
    else if (f == n && wall_r)
      flux_[f] = wall_boundary_flux<1>(scheme_.flux, face_r_[grid_.storage(n - 1)], eos_, 0, +1);
    else
      flux_[f] = numerical_flux<1>(scheme_.flux, face_r_[grid_.storage(f - 1)], face_l_[grid_.storage(f)], eos_, 0);
  }

  if (out.size() != q.size()) out = Field(q.size());
  out.data().setZero();
  for (int i = 0; i < n; ++i) {
    const int s = grid_.storage(i);
    out.data().col(s) = -(flux_[i + 1] - flux_[i]) / dx + src_[s];
  }
}

double Solver1D::cfl_dt(const Field& q, double cfl) const {
  double smax = 0.0;
  for (int i = 0; i < grid_.n_cells(); ++i) {
    const auto s = to_primitive<1>(q.data().col(grid_.storage(i)), eos_, 0);
    smax = std::max(smax, std::abs(s.un) + eos_.sound_speed(s.rho, s.p));
  }
  return cfl * grid_.dx() / smax;
}

void Solver1D::check_state(const Field& q) const {
  for (int i = 0; i < grid_.n_cells(); ++i) {
    const auto c = q.data().col(grid_.storage(i));
    const double eps = c[2] - 0.5 * c[1] * c[1] / c[0];
    if (!(c[0] > 0.0) || !(eps > 0.0) || !std::isfinite(c[2])) {
      std::ostringstream os;
      os << "non-physical state in cell " << i << ": rho=" << c[0] << " eps=" << eps;
      throw StepError(os.str());
    }
  }
}

void Solver1D::fill_ghosts(Field& q) {
  fill_side(q, -1);
  fill_side(q, +1);
}

void Solver1D::fill_side(Field& q, int side) {
  const int n = grid_.n_cells(), ng = grid_.n_ghost();
  const BoundaryKind kind = side < 0 ? bc_.left : bc_.right;
  switch (kind) {
    case BoundaryKind::Periodic:
      for (int k = 1; k <= ng; ++k) {
        if (side < 0)
          q.data().col(grid_.storage(-k)) = q.data().col(grid_.storage(n - k));
        else
          q.data().col(grid_.storage(n - 1 + k)) = q.data().col(grid_.storage(k - 1));
      }
      return;
    case BoundaryKind::Dirichlet:
      if (!frozen_) throw ConfigError("Dirichlet boundary without boundary data");
      for (int k = 1; k <= ng; ++k) {
        const int s = grid_.storage(side < 0 ? -k : n - 1 + k);
        q.data().col(s) = frozen_->data().col(s);
      }
      return;
    case BoundaryKind::HydrostaticExtrapolation:
    case BoundaryKind::SolidWall:
      extrapolate_ghost_densities(q, side);
      hydrostatic_ghost_energies(q, side);
      return;
    default: throw ConfigError("boundary kind '" + boundary_name(kind) + "' is not available in 1D");
  }
}

void Solver1D::extrapolate_ghost_densities(Field& q, int side) const {
  const int n = grid_.n_cells(), ng = grid_.n_ghost();
  const int b = side < 0 ? r_ : n - 1 - r_;
  const Poly1d rho = standard_reconstruction(q, 0, b);
  const Poly1d mom = standard_reconstruction(q, 1, b);
  for (int k = 1; k <= ng; ++k) {
    const int g = side < 0 ? -k : n - 1 + k;
    const double a = grid_.interface(g), c = grid_.interface(g + 1);
    q.data()(0, grid_.storage(g)) = rho.average(a, c);
    q.data()(1, grid_.storage(g)) = mom.average(a, c);
  }
}

void Solver1D::hydrostatic_ghost_energies(Field& q, int side) {
  const int n = grid_.n_cells(), ng = grid_.n_ghost();
  const int b = side < 0 ? 0 : n - 1;
  const bool piecewise = is_piecewise(scheme_.kind);
  const double dx = grid_.dx();

  // Density reconstructions of the boundary cell's stencil (and, for the
  // piecewise profile, of the ghosts that have a complete stencil).
  const int reach = piecewise ? r_ : 0;
  const int deep = piecewise ? r_ + 1 : 0;
  for (int k = b - reach; k <= b + reach; ++k) rho_rec_[grid_.storage(k)] = standard_reconstruction(q, 0, k);
  for (int j = reach + 1; j <= deep; ++j) {
    const int k = b + side * j;
    rho_rec_[grid_.storage(k)] = standard_reconstruction(q, 0, k);
  }
  const int sb = grid_.storage(b);
  mom_rec_[sb] = standard_reconstruction(q, 1, b);

  LocalSource1D src = local_source(b);
  const double eps_hat = estimate_internal_energy(q.data()(2, sb), rho_rec_[sb], mom_rec_[sb], rule_);
  const double p0 = eos_.is_ideal()
                        ? anchor_pressure_ideal(src, eps_hat, eos_.gamma(), rule_)
                        : anchor_pressure_newton(src, eps_hat, q.data()(0, sb), eos_, rule_, scheme_.newton_tol,
                                                 scheme_.newton_max_iter, b)
                              .p0;

  // Walk outwards gluing per-cell antiderivatives; beyond the last
  // reconstructed ghost the outermost segment is extrapolated.
  const Poly1d& rho_b = rho_rec_[sb];
  const Poly1d& mom_b = mom_rec_[sb];
  Poly1d seg_rho = rho_b;
  Poly1d seg_anti = (rho_b * g_int_[sb]).antiderivative();
  double offset = p0;
  for (int j = 1; j <= ng; ++j) {
    const int k = b + side * j;
    if (piecewise && j <= deep) {
      const int sk = grid_.storage(k);
      const double face = side < 0 ? grid_.interface(k + 1) : grid_.interface(k);
      const Poly1d anti = (rho_rec_[sk] * g_int_[sk]).antiderivative();
      offset += seg_anti(face) - anti(face);
      seg_anti = anti;
      seg_rho = rho_rec_[sk];
    }
    const double xc = grid_.center(k);
    double e = 0.0;
    for (int a = 0; a < rule_.size(); ++a) {
      const double x = xc + rule_.node(a) * dx;
      const double p = offset + seg_anti(x);
      const double rho_eq = seg_rho(x);
      if (!(p > 0.0) || !(rho_eq > 0.0)) throw EquilibriumError("hydrostatic ghost profile turned non-positive", k);
      const double m = mom_b(x);
      e += rule_.weight(a) * (eos_.internal_energy(rho_eq, p) + 0.5 * m * m / rho_b(x));
    }
    q.data()(2, grid_.storage(k)) = e;
  }
}

}  // namespace wbfv
