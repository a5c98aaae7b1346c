#pragma once

#include <array>
#include <optional>

#include <matterwave/grid.hpp>
#include <matterwave/model.hpp>
#include <matterwave/verify.hpp>

namespace mw {

using Matrix4 = std::array<std::array<double, 4>, 4>;
using Vector4 = std::array<double, 4>;

/// x-axis boost acting on (c0 t, x, y, z).
struct BoostSpec {
  double c0 = 1.0;
  double V = 0.0;
  double beta = 0.0;
  double gamma = 1.0;
  Matrix4 Lambda{};
};

/// Throws SuperluminalBoost for |V| >= c0.
BoostSpec make_boost(const Constants& constants, double V);

Matrix4 multiply(const Matrix4& a, const Matrix4& b);
Vector4 apply(const Matrix4& m, const Vector4& x);
double determinant(const Matrix4& m);

/// (u_x - V) / (1 - u_x V / c0^2).
double compose_velocity(double u_x, double V, double c0);

/// Particle quantities as measured in one inertial frame. frame_velocity is
/// the velocity of that frame relative to the particle's reference frame S.
struct FrameQuantities {
  double rho = 0.0;
  double phi0 = 0.0;  // total intrinsic potential density
  double V_P = 0.0;
  double u_x = 0.0;
  double E0 = 0.0;    // phi0 V_P
  double frame_velocity = 0.0;
};

/// Quantities of a spec in its reference frame: rho0, rho0 |u|^2, V_P, u_x.
FrameQuantities frame_quantities(const ParticleSpec& spec);

/// rho and phi0 scale by gamma(W') / gamma(W) and V_P by the inverse, where W
/// and W' are the frame velocities before and after the boost, so a single
/// boost from S gives rho' = gamma rho, phi0' = gamma phi0, V_P' = V_P / gamma,
/// and V followed by -V restores the input. An explicit alpha replaces the
/// density factor (phi0 follows rho); V_P still contracts.
FrameQuantities boost_frame_quantities(const FrameQuantities& q, const BoostSpec& boost,
                                       std::optional<double> alpha = std::nullopt);

struct BoostedWaveResult {
  ResidualReport report;     // identity BoostedWaveEqRho, divided by (1 - beta^2)
  double u_x_prime = 0.0;
  double density_factor = 0.0;  // alpha, gamma by default
  double differential_scale = 0.0;  // 1 - beta^2 applied to both operators
  double scaled_max_residual = 0.0;  // before dividing out (1 - beta^2)
  double phase_velocity_residual = 0.0;  // c_ph^2 - u_x'^2
  ParticleSpec moving;       // the particle as seen in S'
};

/// Density wave equation in the moving frame. The particle must move along x.
/// Electrons are rebuilt with u_x' (so k' = m u_x' / hbar); photons keep k and
/// move at c0. Throws ZeroVelocity when u_x' = 0.
BoostedWaveResult boost_wave_equation(const ParticleSpec& spec, const BoostSpec& boost,
                                      const GridGeometry& grid, const CheckOptions& options = {},
                                      std::optional<double> alpha = std::nullopt);

}  // namespace mw
