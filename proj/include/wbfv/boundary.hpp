#pragma once

#include <string>
#include <string_view>

namespace wbfv {

enum class BoundaryKind {
  Periodic,
  Dirichlet,
  HydrostaticExtrapolation,
  SolidWall,
  Reflecting,
  BackgroundExtrapolation,
};

BoundaryKind boundary_from_name(std::string_view name);
std::string boundary_name(BoundaryKind kind);

struct BoundarySpec1D {
  BoundaryKind left = BoundaryKind::Periodic;
  BoundaryKind right = BoundaryKind::Periodic;

  static BoundarySpec1D both(BoundaryKind k) { return {k, k}; }
  void validate() const;
};

struct BoundarySpec2D {
  BoundaryKind x_lo = BoundaryKind::Periodic;
  BoundaryKind x_hi = BoundaryKind::Periodic;
  BoundaryKind y_lo = BoundaryKind::Periodic;
  BoundaryKind y_hi = BoundaryKind::Periodic;

  static BoundarySpec2D all(BoundaryKind k) { return {k, k, k, k}; }
  void validate() const;
};

}  // namespace wbfv
