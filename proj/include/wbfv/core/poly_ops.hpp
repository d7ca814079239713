#pragma once

#include "wbfv/core/polynomial.hpp"
#include "wbfv/core/quadrature.hpp"

#include <Eigen/Core>

namespace wbfv {

template <typename T, int D>
T poly_integrate(const Poly1<T, D>& p, T a, T b) {
  return p.integrate(a, b);
}

/// Line integral of (sx, sy) along the straight segment from -> to.
template <typename T, int D>
T poly_line_integral_2d(const Poly2<T, D>& sx, const Poly2<T, D>& sy, const Eigen::Matrix<T, 2, 1>& from,
                        const Eigen::Matrix<T, 2, 1>& to) {
  const int deg = std::max(sx.degree(), sy.degree());
  const int points = std::min(GaussRule::kMaxPoints, deg / 2 + 1);
  const GaussRule rule(points);
  const Eigen::Matrix<T, 2, 1> d = to - from;
  T acc = T(0);
  for (int k = 0; k < rule.size(); ++k) {
    const Eigen::Matrix<T, 2, 1> x = from + (T(0.5) + T(rule.node(k))) * d;
    acc += T(rule.weight(k)) * (sx(x) * d[0] + sy(x) * d[1]);
  }
  return acc;
}

template <typename T, int D>
T cell_average_of_poly(const Poly1<T, D>& p, T a, T b) {
  return p.average(a, b);
}

template <typename T, int D>
T cell_average_of_poly(const Poly2<T, D>& p, T x0, T x1, T y0, T y1) {
  return p.average(x0, x1, y0, y1);
}

}  // namespace wbfv
