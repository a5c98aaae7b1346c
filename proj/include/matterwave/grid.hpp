#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include <matterwave/vec3.hpp>

namespace mw {

struct Dims {
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::size_t nz = 0;
  std::size_t nt = 0;

  std::size_t total() const { return nx * ny * nz * nt; }
  std::size_t operator[](int axis) const;
  friend bool operator==(const Dims&, const Dims&) = default;
};

/// Uniform Cartesian lattice over (x, y, z, t). Points are stored row-major
/// in (x, y, z, t) order, so t varies fastest.
struct GridGeometry {
  Vec3 origin;
  double t0 = 0.0;
  double h = 0.0;
  double dt = 0.0;
  Dims dims;

  std::size_t index(std::size_t ix, std::size_t iy, std::size_t iz, std::size_t it) const {
    return ((ix * dims.ny + iy) * dims.nz + iz) * dims.nt + it;
  }
  std::array<std::size_t, 4> unravel(std::size_t index) const;
  Vec3 position(std::size_t ix, std::size_t iy, std::size_t iz) const {
    return {origin.x + static_cast<double>(ix) * h, origin.y + static_cast<double>(iy) * h,
            origin.z + static_cast<double>(iz) * h};
  }
  double time(std::size_t it) const { return t0 + static_cast<double>(it) * dt; }

  /// Same point counts and origin with h and dt halved.
  GridGeometry refined() const;
  /// Drops `margin` points from both ends of every axis.
  GridGeometry interior(std::size_t margin) const;
};

/// Minimum points per axis for the sampled grids (order-4 central stencil width).
inline constexpr std::size_t kMinGridPoints = 5;

/// Throws GridTooSmall / InvalidArgument for unusable sampling geometries.
void validate_geometry(const GridGeometry& geometry);

/// One real channel on a lattice.
struct ScalarField {
  GridGeometry geometry;
  std::vector<double> values;

  ScalarField() = default;
  explicit ScalarField(const GridGeometry& g) : geometry(g), values(g.dims.total(), 0.0) {}

  double& at(std::size_t ix, std::size_t iy, std::size_t iz, std::size_t it) {
    return values[geometry.index(ix, iy, iz, it)];
  }
  double at(std::size_t ix, std::size_t iy, std::size_t iz, std::size_t it) const {
    return values[geometry.index(ix, iy, iz, it)];
  }
};

using VectorField = std::array<ScalarField, 3>;

}  // namespace mw
