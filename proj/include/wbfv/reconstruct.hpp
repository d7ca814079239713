#pragma once

#include "wbfv/core/polynomial.hpp"

#include <Eigen/Core>

#include <array>
#include <span>
#include <utility>

namespace wbfv {

/// CWENO reconstruction in 1D of order 1, 3 or 5 on the stencil i-r..i+r.
class Cweno1D {
 public:
  static constexpr int kMaxOrder = 5;

  explicit Cweno1D(int order, double eps_factor = 1.0);

  int order() const { return m_; }
  int radius() const { return r_; }
  double eps_factor() const { return eps_factor_; }
  double central_weight() const { return d0_; }
  double side_weight() const { return ds_; }

  /// avg[0..2r] holds the averages of cells i-r..i+r. Writes the m
  /// coefficients of the reconstruction in xi = (x - x_i)/dx.
  void reconstruct_local(const double* avg, double dx, double* coeffs) const;

  Poly1d reconstruct(std::span<const double> avg, double center, double dx) const;

 private:
  int m_, r_;
  double eps_factor_;
  double d0_, ds_;
  Eigen::Matrix<double, kMaxOrder, kMaxOrder> opt_;     // averages -> central coefficients
  std::array<Eigen::Matrix<double, 3, 3>, 3> side_{};  // sub-stencil averages -> sidekick coefficients
  Eigen::Matrix<double, kMaxOrder, kMaxOrder> smooth_;  // smoothness-indicator quadratic form
};

/// CWENO3 on a 3x3 stencil: central quadratic plus four one-sided planes.
/// Order 1 reduces to the constant.
class Cweno2D {
 public:
  explicit Cweno2D(int order, double eps_factor = 1.0);

  int order() const { return m_; }
  int radius() const { return m_ == 1 ? 0 : 1; }

  /// avg[(dj+1)*3 + (di+1)] for di, dj in {-1,0,1}. Writes the six
  /// coefficients (1, xi, eta, xi^2, xi*eta, eta^2).
  void reconstruct_local(const double* avg, double dx, double dy, double* coeffs) const;

  Poly2d reconstruct(std::span<const double> avg, double xc, double yc, double dx, double dy) const;

 private:
  int m_;
  double eps_factor_;
  Eigen::Matrix<double, 6, 6> smooth_;
};

/// Degree-(m-1) interpolation of cell-centred point values in 1D.
class GravityInterp1D {
 public:
  explicit GravityInterp1D(int order);
  int order() const { return m_; }
  /// g[0..m-1] at centres i-r..i+r.
  Poly1d interpolate(std::span<const double> g, double center, double dx) const;

 private:
  int m_;
  Eigen::Matrix<double, 5, 5> inv_;
};

Poly1d interpolate_gravity_1d(std::span<const double> g, double center, double dx);

/// Quadratic through the 3x3 cell-centre values (exact for total degree 2),
/// layout as in Cweno2D. Order 1 gives the constant centre value.
std::pair<Poly2d, Poly2d> interpolate_gravity_2d(std::span<const double> gx, std::span<const double> gy,
                                                 double xc, double yc, double dx, double dy, int order = 3);

/// Six local coefficients (1, xi, eta, xi^2, xi*eta, eta^2) as a Poly2.
Poly2d quadratic_from_coeffs(const double* c, double xc, double yc, double dx, double dy);

}  // namespace wbfv
