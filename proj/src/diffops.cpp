#include <matterwave/diffops.hpp>

#include <cmath>

#include <matterwave/error.hpp>

namespace mw {

namespace {

bool same_spacing(double a, double b) { return std::abs(a - b) <= 1e-12 * std::abs(a); }

void check_lattice(const ScalarField& f, const StencilConfig& cfg) {
  validate(cfg);
  if (!same_spacing(f.geometry.h, cfg.h) || !same_spacing(f.geometry.dt, cfg.dt)) {
    throw Error(ErrorCode::InvalidArgument, "stencil spacing does not match the field lattice");
  }
}

std::size_t stride(const GridGeometry& g, int axis) {
  const Dims& d = g.dims;
  switch (axis) {
    case 0: return d.ny * d.nz * d.nt;
    case 1: return d.nz * d.nt;
    case 2: return d.nt;
    default: return 1;
  }
}

void require_same_lattice(const ScalarField& f, const ScalarField& g) {
  if (!(f.geometry.dims == g.geometry.dims)) {
    throw Error(ErrorCode::InvalidArgument, "fields live on different lattices");
  }
}

}  // namespace

void validate(const StencilConfig& cfg) {
  if (cfg.order != 2 && cfg.order != 4) {
    throw Error(ErrorCode::InvalidArgument, "stencil order must be 2 or 4");
  }
  if (!(cfg.h > 0.0) || !(cfg.dt > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "stencil spacings must be positive");
  }
}

ScalarField partial(const ScalarField& f, int axis, int n, const StencilConfig& cfg) {
  check_lattice(f, cfg);
  if (axis < 0 || axis > 3 || (n != 1 && n != 2)) {
    throw Error(ErrorCode::InvalidArgument, "partial: axis in 0..3 and derivative order 1 or 2");
  }
  const std::size_t r = cfg.margin();
  ScalarField out(f.geometry.interior(r));
  const double step = axis == 3 ? cfg.dt : cfg.h;
  const std::ptrdiff_t s = static_cast<std::ptrdiff_t>(stride(f.geometry, axis));

  // Weights for offsets -2..2 (order 2 uses only -1..1).
  double w[5] = {0, 0, 0, 0, 0};
  if (n == 1 && cfg.order == 2) {
    w[1] = -0.5 / step;
    w[3] = 0.5 / step;
  } else if (n == 1) {
    w[0] = 1.0 / (12.0 * step);
    w[1] = -8.0 / (12.0 * step);
    w[3] = 8.0 / (12.0 * step);
    w[4] = -1.0 / (12.0 * step);
  } else if (cfg.order == 2) {
    const double inv = 1.0 / (step * step);
    w[1] = inv;
    w[2] = -2.0 * inv;
    w[3] = inv;
  } else {
    const double inv = 1.0 / (12.0 * step * step);
    w[0] = -inv;
    w[1] = 16.0 * inv;
    w[2] = -30.0 * inv;
    w[3] = 16.0 * inv;
    w[4] = -inv;
  }

  const Dims& od = out.geometry.dims;
  const double* src = f.values.data();
  double* dst = out.values.data();
  std::size_t o = 0;
  for (std::size_t ix = 0; ix < od.nx; ++ix) {
    for (std::size_t iy = 0; iy < od.ny; ++iy) {
      for (std::size_t iz = 0; iz < od.nz; ++iz) {
        const double* base = src + f.geometry.index(ix + r, iy + r, iz + r, r);
        for (std::size_t it = 0; it < od.nt; ++it, ++o) {
          const double* c = base + it;
          double acc = w[1] * c[-s] + w[2] * c[0] + w[3] * c[s];
          if (cfg.order == 4) acc += w[0] * c[-2 * s] + w[4] * c[2 * s];
          dst[o] = acc;
        }
      }
    }
  }
  return out;
}

ScalarField laplacian(const ScalarField& f, const StencilConfig& cfg) {
  ScalarField out = partial(f, 0, 2, cfg);
  for (int axis = 1; axis < 3; ++axis) out = combine(1.0, out, 1.0, partial(f, axis, 2, cfg));
  return out;
}

ScalarField d_dt(const ScalarField& f, const StencilConfig& cfg) { return partial(f, 3, 1, cfg); }

ScalarField d2_dt2(const ScalarField& f, const StencilConfig& cfg) { return partial(f, 3, 2, cfg); }

VectorField grad(const ScalarField& f, const StencilConfig& cfg) {
  return {partial(f, 0, 1, cfg), partial(f, 1, 1, cfg), partial(f, 2, 1, cfg)};
}

ScalarField div(const VectorField& f, const StencilConfig& cfg) {
  ScalarField out = partial(f[0], 0, 1, cfg);
  out = combine(1.0, out, 1.0, partial(f[1], 1, 1, cfg));
  return combine(1.0, out, 1.0, partial(f[2], 2, 1, cfg));
}

VectorField curl(const VectorField& f, const StencilConfig& cfg) {
  return {combine(1.0, partial(f[2], 1, 1, cfg), -1.0, partial(f[1], 2, 1, cfg)),
          combine(1.0, partial(f[0], 2, 1, cfg), -1.0, partial(f[2], 0, 1, cfg)),
          combine(1.0, partial(f[1], 0, 1, cfg), -1.0, partial(f[0], 1, 1, cfg))};
}

ScalarField laplacian(const FieldGrid& grid, std::string_view channel, const StencilConfig& cfg) {
  return laplacian(grid.channel(channel), cfg);
}

ScalarField d_dt(const FieldGrid& grid, std::string_view channel, const StencilConfig& cfg) {
  return d_dt(grid.channel(channel), cfg);
}

ScalarField d2_dt2(const FieldGrid& grid, std::string_view channel, const StencilConfig& cfg) {
  return d2_dt2(grid.channel(channel), cfg);
}

ScalarField crop(const ScalarField& f, std::size_t margin) {
  ScalarField out(f.geometry.interior(margin));
  const Dims& od = out.geometry.dims;
  std::size_t o = 0;
  for (std::size_t ix = 0; ix < od.nx; ++ix) {
    for (std::size_t iy = 0; iy < od.ny; ++iy) {
      for (std::size_t iz = 0; iz < od.nz; ++iz) {
        for (std::size_t it = 0; it < od.nt; ++it, ++o) {
          out.values[o] = f.at(ix + margin, iy + margin, iz + margin, it + margin);
        }
      }
    }
  }
  return out;
}

ScalarField combine(double a, const ScalarField& f, double b, const ScalarField& g) {
  require_same_lattice(f, g);
  ScalarField out(f.geometry);
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = a * f.values[i] + b * g.values[i];
  return out;
}

VectorField combine(double a, const VectorField& f, double b, const VectorField& g) {
  return {combine(a, f[0], b, g[0]), combine(a, f[1], b, g[1]), combine(a, f[2], b, g[2])};
}

ScalarField scaled(double a, const ScalarField& f) {
  ScalarField out(f.geometry);
  for (std::size_t i = 0; i < out.values.size(); ++i) out.values[i] = a * f.values[i];
  return out;
}

}  // namespace mw
