#pragma once

#include <array>
#include <iosfwd>
#include <string_view>
#include <variant>
#include <vector>

#include <matterwave/grid.hpp>
#include <matterwave/model.hpp>
#include <matterwave/vec3.hpp>

namespace mw {

struct FieldSample {
  Vec3 x;
  double t = 0.0;
  double psi = 0.0;
  double rho = 0.0;
  Vec3 p;
  double phi = 0.0;  // potential part of the intrinsic energy density
  Vec3 E;
  Vec3 B;
  Vec3 A;
};

struct EMField {
  Vec3 E;
  Vec3 B;
};

// Single-particle evaluators. theta = k.x - omega t throughout.

double eval_psi(const ParticleSpec& spec, const Vec3& x, double t);
double eval_rho(const ParticleSpec& spec, const Vec3& x, double t);
Vec3 eval_p(const ParticleSpec& spec, const Vec3& x, double t);
/// Potential part rho0 |u|^2 cos^2(theta).
double eval_phi_intrinsic(const ParticleSpec& spec, const Vec3& x, double t);
/// rho |u|^2 + phi, constant rho0 |u|^2 for a valid spec.
double eval_phi_total(const ParticleSpec& spec, const Vec3& x, double t);
/// Transversal fields with amplitude |u| sqrt(4 pi rho0) along e_t and e_k x e_t.
EMField eval_EB(const ParticleSpec& spec, const Vec3& x, double t);
/// A = -c0 p.
Vec3 eval_A(const ParticleSpec& spec, const Vec3& x, double t);
FieldSample eval_sample(const ParticleSpec& spec, const Vec3& x, double t);

FieldSample eval_packet(const WavePacket& packet, const Vec3& x, double t);

using FieldSource = std::variant<ParticleSpec, WavePacket>;

/// One plane-wave term of a field source, with every amplitude resolved.
struct Mode {
  Vec3 k;
  double omega = 0.0;
  double psi0 = 0.0;
  double rho0 = 0.0;
  Vec3 p_amp;    // p0 e_k
  double phi0 = 0.0;
  Vec3 E_amp;    // |u| sqrt(4 pi rho0) e_t
  Vec3 B_amp;    // |u| sqrt(4 pi rho0) e_k x e_t
};

Mode mode_of(const ParticleSpec& spec);
std::vector<Mode> modes_of(const FieldSource& source);
const Constants& constants_of(const FieldSource& source);
/// Common |u| of all components; throws InvalidArgument when they differ.
double common_speed(const FieldSource& source);

FieldSample eval_modes(const std::vector<Mode>& modes, double c0, const Vec3& x, double t);

enum class Channel { Psi, Rho, Px, Py, Pz, Phi, Ex, Ey, Ez, Bx, By, Bz, Ax, Ay, Az };

inline constexpr std::size_t kChannelCount = 15;

std::string_view channel_name(Channel c);
/// Throws UnknownChannel for names outside the CSV header set.
Channel channel_from_name(std::string_view name);

/// Dense samples of every channel on a uniform lattice.
class FieldGrid {
public:
  explicit FieldGrid(const GridGeometry& geometry);

  const GridGeometry& geometry() const { return geometry_; }
  const ScalarField& channel(Channel c) const { return channels_[static_cast<std::size_t>(c)]; }
  ScalarField& channel(Channel c) { return channels_[static_cast<std::size_t>(c)]; }
  const ScalarField& channel(std::string_view name) const { return channel(channel_from_name(name)); }
  VectorField vector(Channel first) const;

  FieldSample sample(std::size_t index) const;

  friend bool operator==(const FieldGrid& a, const FieldGrid& b);

private:
  GridGeometry geometry_;
  std::array<ScalarField, kChannelCount> channels_;
};

/// Evaluates every channel at every lattice point. Throws GridTooSmall when
/// any axis has fewer than kMinGridPoints points.
FieldGrid sample_grid(const FieldSource& source, const GridGeometry& geometry);

/// CSV with header x,y,z,t,psi,rho,px,py,pz,phi,Ex,Ey,Ez,Bx,By,Bz,Ax,Ay,Az,
/// one row per lattice point in storage order, shortest round-trip decimals.
void write_csv(const FieldGrid& grid, std::ostream& out);

}  // namespace mw
