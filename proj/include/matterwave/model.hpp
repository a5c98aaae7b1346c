#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include <matterwave/vec3.hpp>

namespace mw {

enum class UnitSystem { Natural, SI };

struct Constants {
  double c0 = 1.0;
  double hbar = 1.0;
  double h = 0.0;  // always 2 pi hbar
  double m = 1.0;
  double e = 1.0;
  double sigma_bar = 1.0;
  double epsilon = 1.0;
  double mu_perm = 1.0;
};

struct ConstantOverrides {
  std::optional<double> c0;
  std::optional<double> hbar;
  std::optional<double> m;
  std::optional<double> e;
  std::optional<double> sigma_bar;
  std::optional<double> epsilon;
  std::optional<double> mu_perm;
};

/// Natural units set every constant to 1 (so h = 2 pi). SI uses CODATA 2018
/// magnitudes with the electron as the particle and sigma_bar = e/m, which
/// makes rho_bar / sigma_bar = m / e for unit rho_bar.
Constants make_constants(UnitSystem system, const ConstantOverrides& overrides = {});

/// Charge density associated with a mass density: sigma = rho e / m.
inline double charge_density(const Constants& c, double rho) { return rho * c.e / c.m; }

enum class ParticleKind { Electron, Photon };

std::string_view to_string(ParticleKind kind);

/// One monochromatic plane-wave particle. Plain value type; factories below
/// establish the invariants, and validate() re-checks them.
struct ParticleSpec {
  ParticleKind kind = ParticleKind::Electron;
  Constants constants;
  double rho0 = 0.0;   // density amplitude
  Vec3 u;              // mechanical velocity
  Vec3 k;              // wave vector
  double omega = 0.0;  // angular frequency
  Vec3 e_k;            // propagation direction
  Vec3 e_t;            // transversal polarization
  double V_P = 0.0;    // particle volume
  double psi0 = 0.0;   // real wave amplitude, rho0 = C_amp psi0^2
  double C_amp = 1.0;
  double phi0 = 0.0;   // intrinsic potential amplitude, rho0 |u|^2

  double speed() const { return norm(u); }
  double wavenumber() const { return norm(k); }
  double wavelength() const;
  double period() const;
  double phase_velocity() const { return omega / wavenumber(); }
  double phase(const Vec3& x, double t) const { return dot(k, x) - omega * t; }
  /// e_k x e_t, direction of B and of the rotation axis.
  Vec3 e_b() const { return cross(e_k, e_t); }
};

Constants natural_constants();

/// Electron with k = (m |u| / hbar) e_k and omega = m |u|^2 / hbar.
/// V_P defaults to m / rho_bar = 2 m / rho0, the volume holding the inertial mass.
ParticleSpec make_electron(const Constants& constants, double rho0, const Vec3& u,
                           std::optional<double> V_P = std::nullopt, double C_amp = 1.0);

/// Photon moving at c0 along e_k with |k| = omega / c0 and phi0 = rho0 c0^2.
/// V_P defaults to one cubic wavelength.
ParticleSpec make_photon(const Constants& constants, double rho0, const Vec3& e_k, double omega,
                         std::optional<double> V_P = std::nullopt, double C_amp = 1.0);

/// Copy of spec with omega scaled; used to break the dispersion relation on purpose.
ParticleSpec detuned(const ParticleSpec& spec, double omega_factor);

/// Unit vector orthogonal to e_k: Gram-Schmidt on the first standard basis
/// vector e_i with |e_i . e_k| <= 0.9.
Vec3 transversal_direction(const Vec3& e_k);

/// Throws mw::Error when any ParticleSpec invariant is broken (relative tol).
void validate(const ParticleSpec& spec, double rel_tol = 1e-12);

struct WavePacket {
  std::vector<ParticleSpec> components;
  std::vector<double> p0;    // longitudinal momentum amplitudes
  std::vector<double> phi0;  // intrinsic potential amplitudes

  std::size_t size() const { return components.size(); }
  ParticleKind kind() const { return components.front().kind; }
  const Constants& constants() const { return components.front().constants; }
};

/// Packet with p_i0 = rho_i0 |u_i| and phi_i0 = rho_i0 |u_i|^2. Requires N >= 1,
/// a common kind and common constants; photon components must satisfy
/// p_i0 k_i - (omega_i / c0^2) phi_i0 = 0.
WavePacket make_packet(std::vector<ParticleSpec> components);

/// p_i0 |k_i| - (omega_i / c0^2) phi_i0 for component i.
double photon_balance_residual(const WavePacket& packet, std::size_t i);

}  // namespace mw
