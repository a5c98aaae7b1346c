#include <matterwave/model.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <matterwave/error.hpp>

namespace mw {

std::string_view to_string(ParticleKind kind) {
  return kind == ParticleKind::Electron ? "electron" : "photon";
}

namespace {

void apply(double& slot, const std::optional<double>& value, const char* name) {
  if (!value) return;
  if (!(*value > 0.0) || !std::isfinite(*value)) {
    throw Error(ErrorCode::InvalidConstant, std::string(name) + " must be positive and finite");
  }
  slot = *value;
}

bool close(double a, double b, double rel_tol) {
  return std::abs(a - b) <= rel_tol * std::max({std::abs(a), std::abs(b), 1e-300});
}

}  // namespace

Constants make_constants(UnitSystem system, const ConstantOverrides& o) {
  Constants c;
  if (system == UnitSystem::SI) {
    c.c0 = 299792458.0;
    c.hbar = 1.054571817e-34;
    c.m = 9.1093837015e-31;
    c.e = 1.602176634e-19;
    c.epsilon = 8.8541878128e-12;
    c.mu_perm = 1.25663706212e-6;
  }
  apply(c.c0, o.c0, "c0");
  apply(c.hbar, o.hbar, "hbar");
  apply(c.m, o.m, "m");
  apply(c.e, o.e, "e");
  apply(c.epsilon, o.epsilon, "epsilon");
  apply(c.mu_perm, o.mu_perm, "mu_perm");
  c.sigma_bar = system == UnitSystem::SI ? c.e / c.m : 1.0;
  apply(c.sigma_bar, o.sigma_bar, "sigma_bar");
  c.h = 2.0 * std::numbers::pi * c.hbar;
  return c;
}

Constants natural_constants() { return make_constants(UnitSystem::Natural); }

double ParticleSpec::wavelength() const { return 2.0 * std::numbers::pi / wavenumber(); }

double ParticleSpec::period() const { return 2.0 * std::numbers::pi / omega; }

Vec3 transversal_direction(const Vec3& e_k) {
  const Vec3 basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (const Vec3& b : basis) {
    if (std::abs(dot(b, e_k)) > 0.9) continue;
    Vec3 t = b - dot(b, e_k) * e_k;
    t = normalized(t);
    t = normalized(t - dot(t, e_k) * e_k);
    return t;
  }
  // Unreachable for a unit e_k: at least one component is below 1/sqrt(3).
  throw Error(ErrorCode::InvalidArgument, "propagation direction is not a unit vector");
}

ParticleSpec make_electron(const Constants& constants, double rho0, const Vec3& u,
                           std::optional<double> V_P, double C_amp) {
  const double speed = norm(u);
  if (speed == 0.0) throw Error(ErrorCode::ZeroVelocity, "electron velocity is zero");
  if (speed >= constants.c0) {
    throw Error(ErrorCode::SuperluminalElectron, "electron speed must be below c0");
  }
  if (!(rho0 > 0.0)) throw Error(ErrorCode::InvalidArgument, "rho0 must be positive");
  if (!(C_amp > 0.0)) throw Error(ErrorCode::InvalidArgument, "C_amp must be positive");
  if (V_P && !(*V_P > 0.0)) throw Error(ErrorCode::InvalidArgument, "V_P must be positive");

  ParticleSpec s;
  s.kind = ParticleKind::Electron;
  s.constants = constants;
  s.rho0 = rho0;
  s.u = u;
  s.e_k = u / speed;
  const double kmag = constants.m * speed / constants.hbar;
  s.k = kmag * s.e_k;
  s.omega = constants.m * speed * speed / constants.hbar;
  s.e_t = transversal_direction(s.e_k);
  s.V_P = V_P.value_or(2.0 * constants.m / rho0);
  s.C_amp = C_amp;
  s.psi0 = std::sqrt(rho0 / C_amp);
  s.phi0 = rho0 * speed * speed;
  return s;
}

ParticleSpec make_photon(const Constants& constants, double rho0, const Vec3& e_k, double omega,
                         std::optional<double> V_P, double C_amp) {
  if (!(rho0 > 0.0)) throw Error(ErrorCode::InvalidArgument, "rho0 must be positive");
  if (!(omega > 0.0)) throw Error(ErrorCode::InvalidArgument, "omega must be positive");
  if (!(C_amp > 0.0)) throw Error(ErrorCode::InvalidArgument, "C_amp must be positive");
  if (V_P && !(*V_P > 0.0)) throw Error(ErrorCode::InvalidArgument, "V_P must be positive");
  const double len = norm(e_k);
  if (!(len > 0.0)) throw Error(ErrorCode::InvalidArgument, "propagation direction is zero");

  ParticleSpec s;
  s.kind = ParticleKind::Photon;
  s.constants = constants;
  s.rho0 = rho0;
  s.e_k = e_k / len;
  s.u = constants.c0 * s.e_k;
  s.omega = omega;
  s.k = (omega / constants.c0) * s.e_k;
  s.e_t = transversal_direction(s.e_k);
  const double lambda = 2.0 * std::numbers::pi * constants.c0 / omega;
  s.V_P = V_P.value_or(lambda * lambda * lambda);
  s.C_amp = C_amp;
  s.psi0 = std::sqrt(rho0 / C_amp);
  s.phi0 = rho0 * constants.c0 * constants.c0;
  return s;
}

ParticleSpec detuned(const ParticleSpec& spec, double omega_factor) {
  ParticleSpec s = spec;
  s.omega *= omega_factor;
  return s;
}

void validate(const ParticleSpec& s, double rel_tol) {
  const Constants& c = s.constants;
  for (double v : {c.c0, c.hbar, c.h, c.m, c.e, c.sigma_bar, c.epsilon, c.mu_perm}) {
    if (!(v > 0.0)) throw Error(ErrorCode::InvalidConstant, "constants must be positive");
  }
  if (!close(c.h, 2.0 * std::numbers::pi * c.hbar, 1e-15)) {
    throw Error(ErrorCode::InvalidConstant, "h != 2 pi hbar");
  }
  if (!(s.rho0 > 0.0) || !(s.V_P > 0.0) || !(s.C_amp > 0.0)) {
    throw Error(ErrorCode::InvalidArgument, "rho0, V_P and C_amp must be positive");
  }
  const double speed = s.speed();
  if (speed == 0.0) throw Error(ErrorCode::ZeroVelocity, "velocity is zero");
  if (s.kind == ParticleKind::Electron && speed >= c.c0) {
    throw Error(ErrorCode::SuperluminalElectron, "electron speed must be below c0");
  }
  if (s.kind == ParticleKind::Photon && !close(speed, c.c0, rel_tol)) {
    throw Error(ErrorCode::InvalidArgument, "photon speed must equal c0");
  }
  if (!close(norm(s.e_k), 1.0, rel_tol) || !close(norm(s.e_t), 1.0, rel_tol) ||
      std::abs(dot(s.e_k, s.e_t)) > rel_tol) {
    throw Error(ErrorCode::InvalidArgument, "e_k, e_t must be orthonormal");
  }
  if (norm(s.k - s.wavenumber() * s.e_k) > rel_tol * s.wavenumber() ||
      norm(s.u - speed * s.e_k) > rel_tol * speed) {
    throw Error(ErrorCode::InvalidArgument, "k and u must be parallel to e_k");
  }
  if (!close(s.omega, s.wavenumber() * speed, rel_tol)) {
    throw Error(ErrorCode::InvalidArgument, "omega != |k| |u| (phase velocity must equal |u|)");
  }
  if (s.kind == ParticleKind::Electron && !close(s.wavenumber(), c.m * speed / c.hbar, rel_tol)) {
    throw Error(ErrorCode::InvalidArgument, "electron |k| != m |u| / hbar");
  }
  if (!close(s.rho0, s.C_amp * s.psi0 * s.psi0, rel_tol)) {
    throw Error(ErrorCode::InvalidArgument, "rho0 != C psi0^2");
  }
  if (!close(s.phi0, s.rho0 * speed * speed, rel_tol)) {
    throw Error(ErrorCode::InvalidArgument, "phi0 != rho0 |u|^2");
  }
}

WavePacket make_packet(std::vector<ParticleSpec> components) {
  if (components.empty()) throw Error(ErrorCode::InvalidArgument, "packet needs at least one component");
  WavePacket packet;
  const ParticleSpec& first = components.front();
  for (const ParticleSpec& s : components) {
    if (s.kind != first.kind) throw Error(ErrorCode::InvalidArgument, "packet components must share kind");
    const Constants& a = s.constants;
    const Constants& b = first.constants;
    if (a.c0 != b.c0 || a.hbar != b.hbar || a.m != b.m || a.e != b.e || a.sigma_bar != b.sigma_bar ||
        a.epsilon != b.epsilon || a.mu_perm != b.mu_perm) {
      throw Error(ErrorCode::InvalidArgument, "packet components must share constants");
    }
    packet.p0.push_back(s.rho0 * s.speed());
    packet.phi0.push_back(s.rho0 * s.speed() * s.speed());
  }
  packet.components = std::move(components);
  if (packet.kind() == ParticleKind::Photon) {
    for (std::size_t i = 0; i < packet.size(); ++i) {
      const double scale = packet.p0[i] * packet.components[i].wavenumber();
      if (std::abs(photon_balance_residual(packet, i)) > 1e-12 * scale) {
        throw Error(ErrorCode::InvalidArgument, "photon component violates p0 k = (omega/c0^2) phi0");
      }
    }
  }
  return packet;
}

double photon_balance_residual(const WavePacket& packet, std::size_t i) {
  const ParticleSpec& s = packet.components.at(i);
  const double c0 = s.constants.c0;
  return packet.p0[i] * s.wavenumber() - (s.omega / (c0 * c0)) * packet.phi0[i];
}

}  // namespace mw
