#include "wbfv/boundary.hpp"

#include "wbfv/core/types.hpp"

namespace wbfv {

BoundaryKind boundary_from_name(std::string_view name) {
  if (name == "periodic") return BoundaryKind::Periodic;
  if (name == "dirichlet") return BoundaryKind::Dirichlet;
  if (name == "hydrostatic") return BoundaryKind::HydrostaticExtrapolation;
  if (name == "wall") return BoundaryKind::SolidWall;
  if (name == "reflecting") return BoundaryKind::Reflecting;
  if (name == "background") return BoundaryKind::BackgroundExtrapolation;
  throw ConfigError("unknown boundary kind '" + std::string(name) + "'");
}

std::string boundary_name(BoundaryKind kind) {
  switch (kind) {
    case BoundaryKind::Periodic: return "periodic";
    case BoundaryKind::Dirichlet: return "dirichlet";
    case BoundaryKind::HydrostaticExtrapolation: return "hydrostatic";
    case BoundaryKind::SolidWall: return "wall";
    case BoundaryKind::Reflecting: return "reflecting";
    case BoundaryKind::BackgroundExtrapolation: return "background";
  }
  return "?";
}

void BoundarySpec1D::validate() const {
  if ((left == BoundaryKind::Periodic) != (right == BoundaryKind::Periodic))
    throw ConfigError("periodic boundaries must be paired");
}

void BoundarySpec2D::validate() const {
  if ((x_lo == BoundaryKind::Periodic) != (x_hi == BoundaryKind::Periodic) ||
      (y_lo == BoundaryKind::Periodic) != (y_hi == BoundaryKind::Periodic))
    throw ConfigError("periodic boundaries must be paired");
}

}  // namespace wbfv
