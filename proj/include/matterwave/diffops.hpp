#pragma once

#include <string_view>

#include <matterwave/fields.hpp>
#include <matterwave/grid.hpp>

namespace mw {

/// Central-difference stencil. Every operator returns values on the interior
/// lattice obtained by dropping order/2 points from both ends of all four axes,
/// so outputs of different operators line up point for point.
struct StencilConfig {
  int order = 2;  // 2 or 4
  double h = 0.0;
  double dt = 0.0;

  static StencilConfig for_grid(const GridGeometry& g, int order = 2) { return {order, g.h, g.dt}; }
  std::size_t margin() const { return static_cast<std::size_t>(order / 2); }
};

void validate(const StencilConfig& cfg);

/// d^n f / d axis^n, axis 0..2 spatial, 3 time; n in {1, 2}.
ScalarField partial(const ScalarField& f, int axis, int n, const StencilConfig& cfg);

ScalarField laplacian(const ScalarField& f, const StencilConfig& cfg);
ScalarField d_dt(const ScalarField& f, const StencilConfig& cfg);
ScalarField d2_dt2(const ScalarField& f, const StencilConfig& cfg);
VectorField grad(const ScalarField& f, const StencilConfig& cfg);
ScalarField div(const VectorField& f, const StencilConfig& cfg);
VectorField curl(const VectorField& f, const StencilConfig& cfg);

ScalarField laplacian(const FieldGrid& grid, std::string_view channel, const StencilConfig& cfg);
ScalarField d_dt(const FieldGrid& grid, std::string_view channel, const StencilConfig& cfg);
ScalarField d2_dt2(const FieldGrid& grid, std::string_view channel, const StencilConfig& cfg);

/// Restricts f to the interior lattice used by the stencil operators.
ScalarField crop(const ScalarField& f, std::size_t margin);

/// a f + b g on identical lattices.
ScalarField combine(double a, const ScalarField& f, double b, const ScalarField& g);
VectorField combine(double a, const VectorField& f, double b, const VectorField& g);
ScalarField scaled(double a, const ScalarField& f);

}  // namespace mw
