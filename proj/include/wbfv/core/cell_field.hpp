#pragma once

#include "wbfv/core/grid.hpp"
#include "wbfv/core/types.hpp"

#include <Eigen/Core>

namespace wbfv {

/// Conserved cell averages, one column per cell including ghosts.
template <typename T, int Dim>
class CellFieldT {
 public:
  static constexpr int kVars = Dim + 2;
  using Storage = Eigen::Matrix<T, kVars, Eigen::Dynamic>;
  using State = StateT<T, Dim>;

  CellFieldT() = default;
  explicit CellFieldT(int n_total) : data_(Storage::Zero(kVars, n_total)) {}
  explicit CellFieldT(const Grid1DT<T>& g) requires(Dim == 1) : CellFieldT(g.n_total()) {}
  explicit CellFieldT(const Grid2DT<T>& g) requires(Dim == 2) : CellFieldT(g.n_total()) {}

  int size() const { return static_cast<int>(data_.cols()); }
  Storage& data() { return data_; }
  const Storage& data() const { return data_; }

  /// Access by storage index (ghost-offset already applied).
  auto at(int k) { return data_.col(k); }
  auto at(int k) const { return data_.col(k); }

 private:
  Storage data_;
};

using CellField1 = CellFieldT<double, 1>;
using CellField2 = CellFieldT<double, 2>;

}  // namespace wbfv
