#include "wbfv/reconstruct.hpp"

#include "wbfv/core/types.hpp"

#include <Eigen/LU>

#include <cmath>
#include <string>

namespace wbfv {
namespace {

// Integral of xi^p over [-1/2, 1/2].
double centered_moment(int p) {
  if (p % 2) return 0.0;
  return 2.0 * std::pow(0.5, p + 1) / (p + 1);
}

// Integral of xi^p over [j - 1/2, j + 1/2].
double shifted_moment(int j, int p) {
  return (std::pow(j + 0.5, p + 1) - std::pow(j - 0.5, p + 1)) / (p + 1);
}

double falling(int j, int l) {
  double f = 1.0;
  for (int k = 0; k < l; ++k) f *= (j - k);
  return f;
}

// Inverse of the cell-average Vandermonde matrix on cells first..first+count-1.
Eigen::MatrixXd average_vandermonde_inverse(int first, int count) {
  Eigen::MatrixXd a(count, count);
  for (int row = 0; row < count; ++row)
    for (int k = 0; k < count; ++k) a(row, k) = shifted_moment(first + row, k);
  return a.inverse();
}

}  // namespace

Cweno1D::Cweno1D(int order, double eps_factor) : m_(order), r_((order - 1) / 2), eps_factor_(eps_factor) {
  if (order != 1 && order != 3 && order != 5)
    throw ConfigError("CWENO order must be 1, 3 or 5, got " + std::to_string(order));
  if (!(eps_factor > 0.0)) throw ConfigError("CWENO regularisation must be positive");
  d0_ = 0.5;
  ds_ = r_ > 0 ? (1.0 - d0_) / (r_ + 1) : 0.0;
  opt_.setZero();
  smooth_.setZero();
  opt_.topLeftCorner(m_, m_) = average_vandermonde_inverse(-r_, m_);
  for (int s = 0; s <= r_ && r_ > 0; ++s) {
    side_[s].setZero();
    side_[s].topLeftCorner(r_ + 1, r_ + 1) = average_vandermonde_inverse(s - r_, r_ + 1);
  }
  for (int j = 0; j < m_; ++j)
    for (int k = 0; k < m_; ++k) {
      double acc = 0.0;
      for (int l = 1; l <= std::min(j, k); ++l) acc += falling(j, l) * falling(k, l) * centered_moment(j + k - 2 * l);
      smooth_(j, k) = acc;
    }
}

void Cweno1D::reconstruct_local(const double* avg, double dx, double* coeffs) const {
  if (m_ == 1) {
    coeffs[0] = avg[0];
    return;
  }
  double copt[kMaxOrder] = {};
  for (int j = 0; j < m_; ++j) {
    double acc = 0.0;
    for (int k = 0; k < m_; ++k) acc += opt_(j, k) * avg[k];
    copt[j] = acc;
  }
  auto indicator = [&](const double* c, int n) {
    double acc = 0.0;
    for (int j = 1; j < n; ++j)
      for (int k = 1; k < n; ++k) acc += smooth_(j, k) * c[j] * c[k];
    return acc;
  };
  const double eps = eps_factor_ * dx * dx;
  const int ns = r_ + 1;
  double cs[3][3] = {};
  double alpha[4];
  const double is0 = indicator(copt, m_);
  alpha[0] = d0_ / ((eps + is0) * (eps + is0));
  double sum = alpha[0];
  for (int s = 0; s < ns; ++s) {
    for (int j = 0; j < ns; ++j) {
      double acc = 0.0;
      for (int k = 0; k < ns; ++k) acc += side_[s](j, k) * avg[s + k];
      cs[s][j] = acc;
    }
    const double is = indicator(cs[s], ns);
    alpha[s + 1] = ds_ / ((eps + is) * (eps + is));
    sum += alpha[s + 1];
  }
  const double w0 = alpha[0] / sum;
  const double scale0 = w0 / d0_;
  for (int j = 0; j < m_; ++j) coeffs[j] = scale0 * copt[j];
  for (int s = 0; s < ns; ++s) {
    const double f = alpha[s + 1] / sum - w0 * ds_ / d0_;
    for (int j = 0; j < ns; ++j) coeffs[j] += f * cs[s][j];
  }
}

Poly1d Cweno1D::reconstruct(std::span<const double> avg, double center, double dx) const {
  if (static_cast<int>(avg.size()) != m_) throw ConfigError("CWENO stencil size mismatch");
  double c[kMaxOrder];
  reconstruct_local(avg.data(), dx, c);
  return Poly1d::from_range(c, m_, center, dx);
}

Cweno2D::Cweno2D(int order, double eps_factor) : m_(order), eps_factor_(eps_factor) {
  if (order != 1 && order != 3) throw ConfigError("2D CWENO order must be 1 or 3, got " + std::to_string(order));
  if (!(eps_factor > 0.0)) throw ConfigError("CWENO regularisation must be positive");
  // Exponents of the six monomials.
  const int ea[6] = {0, 1, 0, 2, 1, 0};
  const int eb[6] = {0, 0, 1, 0, 1, 2};
  smooth_.setZero();
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) {
      double acc = 0.0;
      for (int lx = 0; lx <= 2; ++lx)
        for (int ly = 0; lx + ly <= 2; ++ly) {
          if (lx + ly == 0) continue;
          if (ea[p] < lx || ea[q] < lx || eb[p] < ly || eb[q] < ly) continue;
          acc += falling(ea[p], lx) * falling(ea[q], lx) * falling(eb[p], ly) * falling(eb[q], ly) *
                 centered_moment(ea[p] + ea[q] - 2 * lx) * centered_moment(eb[p] + eb[q] - 2 * ly);
        }
      smooth_(p, q) = acc;
    }
}

void Cweno2D::reconstruct_local(const double* u, double dx, double dy, double* c) const {
  const double u00 = u[4];
  if (m_ == 1) {
    c[0] = u00;
    for (int k = 1; k < 6; ++k) c[k] = 0.0;
    return;
  }
  const double um0 = u[3], up0 = u[5], u0m = u[1], u0p = u[7];
  double opt[6];
  opt[1] = 0.5 * (up0 - um0);
  opt[2] = 0.5 * (u0p - u0m);
  opt[3] = 0.5 * (up0 - 2.0 * u00 + um0);
  opt[5] = 0.5 * (u0p - 2.0 * u00 + u0m);
  opt[4] = 0.25 * (u[8] - u[2] - u[6] + u[0]);
  opt[0] = u00 - (opt[3] + opt[5]) / 12.0;

  double is0 = 0.0;
  for (int p = 1; p < 6; ++p)
    for (int q = 1; q < 6; ++q) is0 += smooth_(p, q) * opt[p] * opt[q];

  // Planes NE, NW, SE, SW.
  const double bx[4] = {up0 - u00, u00 - um0, up0 - u00, u00 - um0};
  const double by[4] = {u0p - u00, u0p - u00, u00 - u0m, u00 - u0m};
  constexpr double d0 = 0.5, dp = 0.125;
  const double eps = eps_factor_ * dx * dy;
  double alpha[5];
  alpha[0] = d0 / ((eps + is0) * (eps + is0));
  double sum = alpha[0];
  for (int k = 0; k < 4; ++k) {
    const double is = bx[k] * bx[k] + by[k] * by[k];
    alpha[k + 1] = dp / ((eps + is) * (eps + is));
    sum += alpha[k + 1];
  }
  const double w0 = alpha[0] / sum;
  for (int p = 0; p < 6; ++p) c[p] = (w0 / d0) * opt[p];
  c[0] += u00 * (1.0 - w0 / d0);
  for (int k = 0; k < 4; ++k) {
    const double f = alpha[k + 1] / sum - w0 * dp / d0;
    c[1] += f * bx[k];
    c[2] += f * by[k];
  }
}

Poly2d quadratic_from_coeffs(const double* c, double xc, double yc, double dx, double dy) {
  Poly2d p(Poly2d::Point(xc, yc), Poly2d::Point(dx, dy));
  p.set_coeff(0, 0, c[0]);
  p.set_coeff(1, 0, c[1]);
  p.set_coeff(0, 1, c[2]);
  p.set_coeff(2, 0, c[3]);
  p.set_coeff(1, 1, c[4]);
  p.set_coeff(0, 2, c[5]);
  return p;
}

Poly2d Cweno2D::reconstruct(std::span<const double> avg, double xc, double yc, double dx, double dy) const {
  if (avg.size() != 9) throw ConfigError("2D CWENO needs a 3x3 stencil");
  double c[6];
  reconstruct_local(avg.data(), dx, dy, c);
  return quadratic_from_coeffs(c, xc, yc, dx, dy);
}

GravityInterp1D::GravityInterp1D(int order) : m_(order) {
  if (order < 1 || order > 5 || order % 2 == 0)
    throw ConfigError("gravity interpolation order must be 1, 3 or 5");
  const int r = (order - 1) / 2;
  Eigen::MatrixXd v(m_, m_);
  for (int row = 0; row < m_; ++row)
    for (int k = 0; k < m_; ++k) v(row, k) = std::pow(double(row - r), k);
  inv_.setZero();
  inv_.topLeftCorner(m_, m_) = v.inverse();
}

Poly1d GravityInterp1D::interpolate(std::span<const double> g, double center, double dx) const {
  if (static_cast<int>(g.size()) != m_) throw ConfigError("gravity stencil size mismatch");
  Poly1d p(center, dx);
  for (int k = 0; k < m_; ++k) {
    double acc = 0.0;
    for (int j = 0; j < m_; ++j) acc += inv_(k, j) * g[j];
    p.set_coeff(k, acc);
  }
  return p;
}

Poly1d interpolate_gravity_1d(std::span<const double> g, double center, double dx) {
  return GravityInterp1D(static_cast<int>(g.size())).interpolate(g, center, dx);
}

std::pair<Poly2d, Poly2d> interpolate_gravity_2d(std::span<const double> gx, std::span<const double> gy,
                                                 double xc, double yc, double dx, double dy, int order) {
  auto one = [&](std::span<const double> g) {
    double c[6] = {g[4], 0, 0, 0, 0, 0};
    if (order > 1) {
      c[1] = 0.5 * (g[5] - g[3]);
      c[2] = 0.5 * (g[7] - g[1]);
      c[3] = 0.5 * (g[5] - 2.0 * g[4] + g[3]);
      c[5] = 0.5 * (g[7] - 2.0 * g[4] + g[1]);
      c[4] = 0.25 * (g[8] - g[2] - g[6] + g[0]);
    }
    return quadratic_from_coeffs(c, xc, yc, dx, dy);
  };
  return {one(gx), one(gy)};
}

}  // namespace wbfv
