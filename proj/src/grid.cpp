#include <matterwave/grid.hpp>

#include <matterwave/error.hpp>

namespace mw {

std::size_t Dims::operator[](int axis) const {
  switch (axis) {
    case 0: return nx;
    case 1: return ny;
    case 2: return nz;
    default: return nt;
  }
}

std::array<std::size_t, 4> GridGeometry::unravel(std::size_t index) const {
  const std::size_t it = index % dims.nt;
  index /= dims.nt;
  const std::size_t iz = index % dims.nz;
  index /= dims.nz;
  const std::size_t iy = index % dims.ny;
  const std::size_t ix = index / dims.ny;
  return {ix, iy, iz, it};
}

GridGeometry GridGeometry::refined() const {
  GridGeometry g = *this;
  g.h = h / 2.0;
  g.dt = dt / 2.0;
  return g;
}

GridGeometry GridGeometry::interior(std::size_t margin) const {
  for (int axis = 0; axis < 4; ++axis) {
    if (dims[axis] <= 2 * margin) {
      throw Error(ErrorCode::GridTooSmall, "grid has no interior points for this stencil");
    }
  }
  GridGeometry g = *this;
  const double shift = static_cast<double>(margin);
  g.origin = {origin.x + shift * h, origin.y + shift * h, origin.z + shift * h};
  g.t0 = t0 + shift * dt;
  g.dims = {dims.nx - 2 * margin, dims.ny - 2 * margin, dims.nz - 2 * margin, dims.nt - 2 * margin};
  return g;
}

void validate_geometry(const GridGeometry& g) {
  if (!(g.h > 0.0) || !(g.dt > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "grid spacing h and time step dt must be positive");
  }
  for (int axis = 0; axis < 4; ++axis) {
    if (g.dims[axis] < kMinGridPoints) {
      throw Error(ErrorCode::GridTooSmall, "every grid axis needs at least 5 points");
    }
  }
}

}  // namespace mw
