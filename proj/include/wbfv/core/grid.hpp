#pragma once

#include "wbfv/core/types.hpp"

#include <string>

namespace wbfv {

/// Uniform 1D grid. Interior cells are 0..n_cells-1, ghosts extend the index
/// range to [-n_ghost, n_cells + n_ghost).
template <typename T = double>
class Grid1DT {
 public:
  Grid1DT(T x_min, T x_max, int n_cells, int n_ghost)
      : x_min_(x_min), x_max_(x_max), n_(n_cells), ng_(n_ghost) {
    if (n_cells <= 0) throw ConfigError("grid needs at least one cell");
    if (n_ghost < 0) throw ConfigError("negative ghost count");
    if (!(x_max > x_min)) throw ConfigError("grid requires x_max > x_min");
    dx_ = (x_max - x_min) / T(n_cells);
  }

  T x_min() const { return x_min_; }
  T x_max() const { return x_max_; }
  int n_cells() const { return n_; }
  int n_ghost() const { return ng_; }
  int n_total() const { return n_ + 2 * ng_; }
  T dx() const { return dx_; }

  /// Left face of cell i.
  T interface(int i) const { return x_min_ + T(i) * dx_; }
  T center(int i) const { return x_min_ + (T(i) + T(0.5)) * dx_; }
  int storage(int i) const { return i + ng_; }

  void require_ghosts(int needed) const {
    if (needed > ng_)
      throw ConfigError("scheme needs " + std::to_string(needed) + " ghost cells, grid has " +
                        std::to_string(ng_));
  }

 private:
  T x_min_, x_max_;
  int n_, ng_;
  T dx_;
};

template <typename T = double>
class Grid2DT {
 public:
  Grid2DT(T x_min, T x_max, T y_min, T y_max, int nx, int ny, int n_ghost)
      : x_(x_min, x_max, nx, n_ghost), y_(y_min, y_max, ny, n_ghost) {}

  const Grid1DT<T>& x_axis() const { return x_; }
  const Grid1DT<T>& y_axis() const { return y_; }
  int nx() const { return x_.n_cells(); }
  int ny() const { return y_.n_cells(); }
  int n_ghost() const { return x_.n_ghost(); }
  int stride() const { return x_.n_total(); }
  int n_total() const { return x_.n_total() * y_.n_total(); }
  T dx() const { return x_.dx(); }
  T dy() const { return y_.dx(); }
  T xc(int i) const { return x_.center(i); }
  T yc(int j) const { return y_.center(j); }
  int storage(int i, int j) const { return y_.storage(j) * stride() + x_.storage(i); }
  void require_ghosts(int needed) const { x_.require_ghosts(needed); }

 private:
  Grid1DT<T> x_, y_;
};

using Grid1D = Grid1DT<double>;
using Grid2D = Grid2DT<double>;

}  // namespace wbfv
