#pragma once

#include <array>
#include <functional>

#include <matterwave/model.hpp>
#include <matterwave/vec3.hpp>

namespace mw {

/// Spin from W = g (e / 2 m c0) s B with the rotation field of the particle.
struct SpinResult {
  ParticleKind kind = ParticleKind::Photon;
  double s = 0.0;
  double g = 0.0;
  Vec3 direction{0.0, 0.0, 1.0};
  double product_gs = 0.0;
  double W = 0.0;        // hbar omega (photon) or hbar omega / 2 (electron)
  double B_rot = 0.0;    // (2 rho_bar / sigma_bar) omega or (rho_bar / sigma_bar) omega
  double field_conversion = 0.0;  // c0, framework fields are c0 times classical ones
  double B_used = 0.0;   // field_conversion * B_rot
};

/// s = hbar, g = 1. Throws InvalidFrequency for omega <= 0.
SpinResult spin_photon(const Constants& constants, double omega);
/// g s = hbar split as s = hbar / 2, g = 2. Throws InvalidFrequency for omega <= 0.
SpinResult spin_electron(const Constants& constants, double omega);
/// Dispatch on the spec kind, with direction e_k x e_t.
SpinResult spin_of(const ParticleSpec& spec);

using VectorEvaluator = std::function<Vec3(const Vec3& x, double t)>;
/// Rows are dp/dx, dp/dy, dp/dz.
using MomentumJacobian = std::function<std::array<Vec3, 3>(const Vec3& x, double t)>;

/// B = -(1 / (factor sigma_bar)) curl p with the closed-form curl of the plane
/// wave's momentum density. factor 1 for photons, 2 for electrons; anything
/// else throws InvalidFactor.
VectorEvaluator magnetic_field_from_curl(const ParticleSpec& spec, int factor);
VectorEvaluator magnetic_field_from_curl(const MomentumJacobian& jacobian, double sigma_bar, int factor);

/// Test field, not part of the plane-wave model: rigid rotation
/// p = rho_bar (omega x r), whose curl is 2 rho_bar omega.
struct RigidRotation {
  double rho_bar = 1.0;
  Vec3 omega;

  Vec3 momentum(const Vec3& x) const { return rho_bar * cross(omega, x); }
  MomentumJacobian jacobian() const;
};

}  // namespace mw
