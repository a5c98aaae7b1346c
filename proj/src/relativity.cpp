#include <matterwave/relativity.hpp>

#include <cmath>

#include <matterwave/analytic.hpp>
#include <matterwave/diffops.hpp>
#include <matterwave/error.hpp>
#include <matterwave/fields.hpp>
#include <matterwave/numeric.hpp>

namespace mw {

namespace {

double gamma_of(double V, double c0) {
  const double b = V / c0;
  return 1.0 / std::sqrt(1.0 - b * b);
}

// Relativistic sum of frame velocities.
double add_velocity(double w, double v, double c0) { return (w + v) / (1.0 + w * v / (c0 * c0)); }

ResidualReport analytic_boost_report(const ParticleSpec& moving, const GridGeometry& grid, double inv_u2,
                                     double tol) {
  validate_geometry(grid);
  const std::vector<Mode> modes = {mode_of(moving)};
  const double c0 = moving.constants.c0;
  std::vector<double> r(grid.dims.total());
  parallel_for(r.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const auto [ix, iy, iz, it] = grid.unravel(idx);
      const FieldJets j = eval_jets(modes, c0, grid.position(ix, iy, iz), grid.time(it));
      r[idx] = std::abs(j.rho.lap - inv_u2 * j.rho.dtt);
    }
  });
  const ResidualField s = summarize(r);
  ResidualReport rep;
  rep.identity = Identity::BoostedWaveEqRho;
  rep.method = Method::Analytic;
  rep.max_residual = s.max;
  rep.l2_residual = s.rms;
  rep.tolerance = tol;
  rep.passed = s.max <= tol;
  return rep;
}

ScalarField fd_boost_residual(const ParticleSpec& moving, const GridGeometry& grid, int order,
                              double inv_u2) {
  const FieldGrid g = sample_grid(moving, grid);
  const StencilConfig cfg = StencilConfig::for_grid(grid, order);
  const ScalarField& rho = g.channel(Channel::Rho);
  ScalarField r = combine(1.0, laplacian(rho, cfg), -inv_u2, d2_dt2(rho, cfg));
  for (double& v : r.values) v = std::abs(v);
  return r;
}

}  // namespace

BoostSpec make_boost(const Constants& constants, double V) {
  if (!std::isfinite(V)) throw Error(ErrorCode::InvalidArgument, "boost speed must be finite");
  if (std::abs(V) >= constants.c0) throw Error(ErrorCode::SuperluminalBoost, "boost speed must stay below c0");
  BoostSpec b;
  b.c0 = constants.c0;
  b.V = V;
  b.beta = V / constants.c0;
  b.gamma = 1.0 / std::sqrt(1.0 - b.beta * b.beta);
  const double bg = -b.beta * b.gamma;
  b.Lambda = {{{b.gamma, bg, 0, 0}, {bg, b.gamma, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
  return b;
}

Matrix4 multiply(const Matrix4& a, const Matrix4& b) {
  Matrix4 out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      double s = 0.0;
      for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
      out[i][j] = s;
    }
  }
  return out;
}

Vector4 apply(const Matrix4& m, const Vector4& x) {
  Vector4 out{};
  for (int i = 0; i < 4; ++i) {
    for (int k = 0; k < 4; ++k) out[i] += m[i][k] * x[k];
  }
  return out;
}

double determinant(const Matrix4& m) {
  // Laplace expansion along the first row.
  auto minor3 = [&](int skip) {
    int cols[3];
    for (int c = 0, n = 0; c < 4; ++c) {
      if (c != skip) cols[n++] = c;
    }
    const auto& r1 = m[1];
    const auto& r2 = m[2];
    const auto& r3 = m[3];
    return r1[cols[0]] * (r2[cols[1]] * r3[cols[2]] - r2[cols[2]] * r3[cols[1]]) -
           r1[cols[1]] * (r2[cols[0]] * r3[cols[2]] - r2[cols[2]] * r3[cols[0]]) +
           r1[cols[2]] * (r2[cols[0]] * r3[cols[1]] - r2[cols[1]] * r3[cols[0]]);
  };
  double det = 0.0;
  for (int c = 0; c < 4; ++c) det += (c % 2 == 0 ? 1.0 : -1.0) * m[0][c] * minor3(c);
  return det;
}

double compose_velocity(double u_x, double V, double c0) { return (u_x - V) / (1.0 - u_x * V / (c0 * c0)); }

FrameQuantities frame_quantities(const ParticleSpec& spec) {
  FrameQuantities q;
  q.rho = spec.rho0;
  q.phi0 = spec.rho0 * dot(spec.u, spec.u);
  q.V_P = spec.V_P;
  q.u_x = spec.u.x;
  q.E0 = q.phi0 * q.V_P;
  return q;
}

FrameQuantities boost_frame_quantities(const FrameQuantities& q, const BoostSpec& boost,
                                       std::optional<double> alpha) {
  const double c0 = boost.c0;
  if (std::abs(q.frame_velocity) >= c0) {
    throw Error(ErrorCode::SuperluminalBoost, "frame velocity must stay below c0");
  }
  const double w_new = add_velocity(q.frame_velocity, boost.V, c0);
  const double ratio = gamma_of(w_new, c0) / gamma_of(q.frame_velocity, c0);
  const double density = alpha.value_or(ratio);
  FrameQuantities out;
  out.frame_velocity = w_new;
  out.rho = density * q.rho;
  out.phi0 = density * q.phi0;
  out.V_P = q.V_P / ratio;
  out.u_x = compose_velocity(q.u_x, boost.V, c0);
  out.E0 = out.phi0 * out.V_P;
  return out;
}

BoostedWaveResult boost_wave_equation(const ParticleSpec& spec, const BoostSpec& boost,
                                      const GridGeometry& grid, const CheckOptions& options,
                                      std::optional<double> alpha) {
  const double speed = spec.speed();
  if (!(speed > 0.0)) throw Error(ErrorCode::ZeroVelocity, "boosted wave equation needs |u| > 0");
  if (std::abs(spec.u.y) > 1e-12 * speed || std::abs(spec.u.z) > 1e-12 * speed) {
    throw Error(ErrorCode::InvalidArgument, "boosts are along x; the particle must move along x");
  }
  const Constants& c = spec.constants;
  BoostedWaveResult out;
  out.density_factor = alpha.value_or(boost.gamma);
  out.u_x_prime = compose_velocity(spec.u.x, boost.V, c.c0);
  if (out.u_x_prime == 0.0) throw Error(ErrorCode::ZeroVelocity, "particle is at rest in the moving frame");
  const double rho0 = out.density_factor * spec.rho0;
  if (spec.kind == ParticleKind::Photon) {
    out.moving = make_photon(c, rho0, spec.e_k, spec.omega, spec.V_P, spec.C_amp);
  } else {
    out.moving = make_electron(c, rho0, Vec3{out.u_x_prime, 0.0, 0.0}, std::nullopt, spec.C_amp);
  }
  out.differential_scale = 1.0 - boost.beta * boost.beta;
  const double inv_u2 = 1.0 / (out.u_x_prime * out.u_x_prime);
  const double c_ph = out.moving.phase_velocity();
  out.phase_velocity_residual = c_ph * c_ph - out.u_x_prime * out.u_x_prime;

  if (options.method == Method::Analytic) {
    out.report = analytic_boost_report(out.moving, grid, inv_u2,
                                       options.tolerances.analytic_for(Identity::BoostedWaveEqRho));
  } else {
    validate(StencilConfig::for_grid(grid, options.order));
    out.report = make_fd_report(Identity::BoostedWaveEqRho,
                                fd_boost_residual(out.moving, grid, options.order, inv_u2),
                                fd_boost_residual(out.moving, grid.refined(), options.order, inv_u2),
                                options.order, options.tolerances.fd_floor);
  }
  // Both operators carry the same (1 - beta^2) factor, which divides out.
  out.scaled_max_residual = out.differential_scale * out.report.max_residual;
  return out;
}

}  // namespace mw
