#include "wbfv/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wbfv {
namespace {

enum Face { West = 0, East = 1, South = 2, North = 3 };

bool admissible(const State2& q) {
  return q[0] > 0.0 && q[3] - 0.5 * (q[1] * q[1] + q[2] * q[2]) / q[0] > 0.0;
}

}  // namespace

Solver2D::Solver2D(const Grid2D& grid, const SchemeConfig& scheme, const EosModel& eos, Gravity gravity,
                   const BoundarySpec2D& bc)
    : grid_(grid),
      scheme_(scheme),
      eos_(eos),
      gravity_(std::move(gravity)),
      bc_(bc),
      cweno_(scheme.order, scheme.eps_factor),
      rule_(scheme.quadrature()),
      nq_((scheme.order + 1) / 2) {
  bc_.validate();
  if (is_piecewise(scheme_.kind)) throw ConfigError("the piecewise (dwb) schemes are 1D only");
  grid_.require_ghosts(scheme_.ghosts());
  if (!gravity_) gravity_ = [](double, double) { return Eigen::Vector2d::Zero(); };
  const GaussRule face_rule(nq_);
  for (int k = 0; k < nq_; ++k) {
    face_nodes_[k] = face_rule.node(k);
    face_weights_[k] = face_rule.weight(k);
  }
  const int ng = grid_.n_ghost();
  g_int_.resize(grid_.n_total());
  double gx[9], gy[9];
  for (int j = -ng; j < grid_.ny() + ng; ++j)
    for (int i = -ng; i < grid_.nx() + ng; ++i) {
      for (int dj = -1; dj <= 1; ++dj)
        for (int di = -1; di <= 1; ++di) {
          const Eigen::Vector2d g = gravity_(grid_.xc(i + di), grid_.yc(j + dj));
          gx[(dj + 1) * 3 + di + 1] = g[0];
          gy[(dj + 1) * 3 + di + 1] = g[1];
        }
      g_int_[grid_.storage(i, j)] =
          interpolate_gravity_2d(gx, gy, grid_.xc(i), grid_.yc(j), grid_.dx(), grid_.dy(), scheme_.order);
    }
  faces_.resize(static_cast<size_t>(grid_.n_total()) * 4 * nq_);
  src_.resize(grid_.n_total());
}

Poly2d Solver2D::standard_reconstruction(const Field& q, int comp, int i, int j) const {
  double avg[9], c[6];
  for (int dj = -1; dj <= 1; ++dj)
    for (int di = -1; di <= 1; ++di) avg[(dj + 1) * 3 + di + 1] = q.data()(comp, grid_.storage(i + di, j + dj));
  cweno_.reconstruct_local(avg, grid_.dx(), grid_.dy(), c);
  return quadratic_from_coeffs(c, grid_.xc(i), grid_.yc(j), grid_.dx(), grid_.dy());
}

HydroRec2D Solver2D::reconstruct_cell(const Field& q, int i, int j) {
  const int s = grid_.storage(i, j);
  HydroRec2D rec;
  rec.rho = standard_reconstruction(q, 0, i, j);
  rec.mx = standard_reconstruction(q, 1, i, j);
  rec.my = standard_reconstruction(q, 2, i, j);
  if (scheme_.kind == SchemeKind::Standard) {
    rec.delta_e = standard_reconstruction(q, 3, i, j);
    rec.fallback = true;
    return rec;
  }
  const auto& g = g_int_[s];
  EquilibriumProfile2D profile = build_profile_2d(rec.rho, g.first, g.second);
  profile.i = i;
  profile.j = j;
  const double e_hat = q.data()(3, s);
  Poly2d e_std;
  const Poly2d* e_ptr = nullptr;
  if (is_simplified(scheme_.kind)) {
    e_std = standard_reconstruction(q, 3, i, j);
    e_ptr = &e_std;
    profile.p0 = anchor_pressure_simplified_2d(rec.rho, rec.mx, rec.my, e_std, eos_);
  } else {
    const double eps_hat = estimate_internal_energy_2d(e_hat, rec.rho, rec.mx, rec.my, rule_);
    profile.p0 = eos_.is_ideal() ? anchor_pressure_ideal_2d(profile, eps_hat, eos_.gamma())
                                 : anchor_pressure_newton_2d(profile, eps_hat, q.data()(0, s), eos_, rule_,
                                                             scheme_.newton_tol, scheme_.newton_max_iter)
                                       .p0;
  }
  double e_avg[9];
  for (int dj = -1; dj <= 1; ++dj)
    for (int di = -1; di <= 1; ++di) e_avg[(dj + 1) * 3 + di + 1] = q.data()(3, grid_.storage(i + di, j + dj));
  HydroRec2D out = hydrostatic_reconstruct_2d(cweno_, e_avg, rec.rho, rec.mx, rec.my, profile, eos_, rule_, e_ptr);
  if (out.fallback) ++stats_.fallbacks;
  return out;
}

void Solver2D::rhs(Field& q, Field& out) {
  ++stats_.rhs_calls;
  fill_ghosts(q);
  const int nx = grid_.nx(), ny = grid_.ny();
  const double dx = grid_.dx(), dy = grid_.dy();

  auto process = [&](int i, int j, bool interior) {
    const HydroRec2D rec = reconstruct_cell(q, i, j);
    const int s = grid_.storage(i, j);
    State2* f = &faces_[static_cast<size_t>(s) * 4 * nq_];
    const double xc = grid_.xc(i), yc = grid_.yc(j);
    for (int k = 0; k < nq_; ++k) {
      const double ty = yc + face_nodes_[k] * dy, tx = xc + face_nodes_[k] * dx;
      f[West * nq_ + k] = rec.evaluate(xc - 0.5 * dx, ty, eos_);
      f[East * nq_ + k] = rec.evaluate(xc + 0.5 * dx, ty, eos_);
      f[South * nq_ + k] = rec.evaluate(tx, yc - 0.5 * dy, eos_);
      f[North * nq_ + k] = rec.evaluate(tx, yc + 0.5 * dy, eos_);
    }
    // First-order fallback where the reconstruction leaves the admissible set.
    const bool first_order = !std::all_of(f, f + 4 * nq_, admissible);
    if (first_order) {
      std::fill(f, f + 4 * nq_, State2(q.data().col(s)));
      ++stats_.fallbacks;
    }
    if (interior) {
      const auto& g = g_int_[s];
      const double x0 = xc - 0.5 * dx, x1 = xc + 0.5 * dx, y0 = yc - 0.5 * dy, y1 = yc + 0.5 * dy;
      if (first_order) {
        const Eigen::Vector2d c(xc, yc), h(dx, dy);
        const auto cst = [&](int comp) { return Poly2d::constant(q.data()(comp, s), c, h); };
        src_[s] = source_average_2d(cst(0), cst(1), cst(2), g.first, g.second, x0, x1, y0, y1);
      } else {
        src_[s] = source_average_2d(rec.rho, rec.mx, rec.my, g.first, g.second, x0, x1, y0, y1);
      }
    }
  };
  for (int j = 0; j < ny; ++j)
    for (int i = -1; i <= nx; ++i) process(i, j, i >= 0 && i < nx);
  for (int i = 0; i < nx; ++i) {
    process(i, -1, false);
    process(i, ny, false);
  }

  if (out.size() != q.size()) out = Field(q.size());
  out.data().setZero();
  auto face_states = [&](int i, int j, int face) { return &faces_[(static_cast<size_t>(grid_.storage(i, j)) * 4 + face) * nq_]; };
  for (int j = 0; j < ny; ++j)
    for (int fi = 0; fi <= nx; ++fi) {
      const State2* l = face_states(fi - 1, j, East);
      const State2* r = face_states(fi, j, West);
      State2 flux = State2::Zero();
      for (int k = 0; k < nq_; ++k) flux += face_weights_[k] * numerical_flux<2>(scheme_.flux, l[k], r[k], eos_, 0);
      if (fi > 0) out.data().col(grid_.storage(fi - 1, j)) -= flux / dx;
      if (fi < nx) out.data().col(grid_.storage(fi, j)) += flux / dx;
    }
  for (int fj = 0; fj <= ny; ++fj)
    for (int i = 0; i < nx; ++i) {
      const State2* l = face_states(i, fj - 1, North);
      const State2* r = face_states(i, fj, South);
      State2 flux = State2::Zero();
      for (int k = 0; k < nq_; ++k) flux += face_weights_[k] * numerical_flux<2>(scheme_.flux, l[k], r[k], eos_, 1);
      if (fj > 0) out.data().col(grid_.storage(i, fj - 1)) -= flux / dy;
      if (fj < ny) out.data().col(grid_.storage(i, fj)) += flux / dy;
    }
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) out.data().col(grid_.storage(i, j)) += src_[grid_.storage(i, j)];
}

double Solver2D::cfl_dt(const Field& q, double cfl) const {
  double rate = 0.0;
  for (int j = 0; j < grid_.ny(); ++j)
    for (int i = 0; i < grid_.nx(); ++i) {
      const auto col = q.data().col(grid_.storage(i, j));
      const auto s = to_primitive<2>(State2(col), eos_, 0);
      const double c = eos_.sound_speed(s.rho, s.p);
      rate = std::max(rate, (std::abs(s.un) + c) / grid_.dx() + (std::abs(s.ut) + c) / grid_.dy());
    }
  return cfl / rate;
}

void Solver2D::check_state(const Field& q) const {
  for (int j = 0; j < grid_.ny(); ++j)
    for (int i = 0; i < grid_.nx(); ++i) {
      const auto c = q.data().col(grid_.storage(i, j));
      const double eps = c[3] - 0.5 * (c[1] * c[1] + c[2] * c[2]) / c[0];
      if (!(c[0] > 0.0) || !(eps > 0.0) || !std::isfinite(c[3])) {
        std::ostringstream os;
        os << "non-physical state in cell (" << i << ", " << j << "): rho=" << c[0] << " eps=" << eps;
        throw StepError(os.str());
      }
    }
}

void Solver2D::fill_ghosts(Field& q) {
  fill_x_side(q, -1, bc_.x_lo);
  fill_x_side(q, +1, bc_.x_hi);
  fill_y_side(q, -1, bc_.y_lo);
  fill_y_side(q, +1, bc_.y_hi);
}

void Solver2D::fill_x_side(Field& q, int side, BoundaryKind kind) {
  const int nx = grid_.nx(), ng = grid_.n_ghost();
  for (int j = 0; j < grid_.ny(); ++j)
    for (int k = 1; k <= ng; ++k) {
      const int g = side < 0 ? -k : nx - 1 + k;
      auto dst = q.data().col(grid_.storage(g, j));
      switch (kind) {
        case BoundaryKind::Periodic: dst = q.data().col(grid_.storage(side < 0 ? nx - k : k - 1, j)); break;
        case BoundaryKind::Dirichlet:
          if (!frozen_) throw ConfigError("Dirichlet boundary without boundary data");
          dst = frozen_->data().col(grid_.storage(g, j));
          break;
        case BoundaryKind::Reflecting: {
          dst = q.data().col(grid_.storage(side < 0 ? k - 1 : nx - k, j));
          dst[1] = -dst[1];
          break;
        }
        case BoundaryKind::BackgroundExtrapolation: {
          if (!background_) throw ConfigError("background extrapolation without background data");
          const int b = grid_.storage(side < 0 ? 0 : nx - 1, j);
          dst = background_->data().col(grid_.storage(g, j)) + (q.data().col(b) - background_->data().col(b));
          break;
        }
        default: throw ConfigError("boundary kind '" + boundary_name(kind) + "' is not available in 2D");
      }
    }
}

void Solver2D::fill_y_side(Field& q, int side, BoundaryKind kind) {
  const int ny = grid_.ny(), ng = grid_.n_ghost();
  for (int i = -ng; i < grid_.nx() + ng; ++i)
    for (int k = 1; k <= ng; ++k) {
      const int g = side < 0 ? -k : ny - 1 + k;
      auto dst = q.data().col(grid_.storage(i, g));
      switch (kind) {
        case BoundaryKind::Periodic: dst = q.data().col(grid_.storage(i, side < 0 ? ny - k : k - 1)); break;
        case BoundaryKind::Dirichlet:
          if (!frozen_) throw ConfigError("Dirichlet boundary without boundary data");
          dst = frozen_->data().col(grid_.storage(i, g));
          break;
        case BoundaryKind::Reflecting: {
          dst = q.data().col(grid_.storage(i, side < 0 ? k - 1 : ny - k));
          dst[2] = -dst[2];
          break;
        }
        case BoundaryKind::BackgroundExtrapolation: {
          if (!background_) throw ConfigError("background extrapolation without background data");
          const int b = grid_.storage(i, side < 0 ? 0 : ny - 1);
          dst = background_->data().col(grid_.storage(i, g)) + (q.data().col(b) - background_->data().col(b));
          break;
        }
        default: throw ConfigError("boundary kind '" + boundary_name(kind) + "' is not available in 2D");
      }
    }
}

}  // namespace wbfv
