#include <matterwave/fields.hpp>

#include <cmath>
#include <numbers>
#include <ostream>
#include <string>

#include <matterwave/error.hpp>
#include <matterwave/numeric.hpp>

namespace mw {

namespace {

constexpr std::array<std::string_view, kChannelCount> kChannelNames = {
    "psi", "rho", "px", "py", "pz", "phi", "Ex", "Ey", "Ez", "Bx", "By", "Bz", "Ax", "Ay", "Az"};

double field_amplitude(const ParticleSpec& s) {
  return s.speed() * std::sqrt(4.0 * std::numbers::pi * s.rho0);
}

}  // namespace

double eval_psi(const ParticleSpec& s, const Vec3& x, double t) {
  return s.psi0 * std::sin(s.phase(x, t));
}

double eval_rho(const ParticleSpec& s, const Vec3& x, double t) {
  const double sn = std::sin(s.phase(x, t));
  return s.rho0 * sn * sn;
}

Vec3 eval_p(const ParticleSpec& s, const Vec3& x, double t) { return eval_rho(s, x, t) * s.u; }

double eval_phi_intrinsic(const ParticleSpec& s, const Vec3& x, double t) {
  const double cs = std::cos(s.phase(x, t));
  return s.phi0 * cs * cs;
}

double eval_phi_total(const ParticleSpec& s, const Vec3& x, double t) {
  const double speed = s.speed();
  return eval_rho(s, x, t) * speed * speed + eval_phi_intrinsic(s, x, t);
}

EMField eval_EB(const ParticleSpec& s, const Vec3& x, double t) {
  const double f = field_amplitude(s) * std::cos(s.phase(x, t));
  return {f * s.e_t, f * s.e_b()};
}

Vec3 eval_A(const ParticleSpec& s, const Vec3& x, double t) {
  return -s.constants.c0 * eval_p(s, x, t);
}

Mode mode_of(const ParticleSpec& s) {
  const double a = field_amplitude(s);
  return {s.k, s.omega, s.psi0, s.rho0, s.rho0 * s.u, s.phi0, a * s.e_t, a * s.e_b()};
}

std::vector<Mode> modes_of(const FieldSource& source) {
  if (const auto* spec = std::get_if<ParticleSpec>(&source)) return {mode_of(*spec)};
  const auto& packet = std::get<WavePacket>(source);
  std::vector<Mode> modes;
  modes.reserve(packet.size());
  for (std::size_t i = 0; i < packet.size(); ++i) {
    Mode m = mode_of(packet.components[i]);
    m.p_amp = packet.p0[i] * packet.components[i].e_k;
    m.phi0 = packet.phi0[i];
    modes.push_back(m);
  }
  return modes;
}

const Constants& constants_of(const FieldSource& source) {
  if (const auto* spec = std::get_if<ParticleSpec>(&source)) return spec->constants;
  return std::get<WavePacket>(source).constants();
}

double common_speed(const FieldSource& source) {
  if (const auto* spec = std::get_if<ParticleSpec>(&source)) return spec->speed();
  const auto& packet = std::get<WavePacket>(source);
  const double speed = packet.components.front().speed();
  for (const auto& c : packet.components) {
    if (std::abs(c.speed() - speed) > 1e-14 * speed) {
      throw Error(ErrorCode::InvalidArgument, "packet components must share |u| for wave-equation checks");
    }
  }
  return speed;
}

FieldSample eval_modes(const std::vector<Mode>& modes, double c0, const Vec3& x, double t) {
  FieldSample out;
  out.x = x;
  out.t = t;
  for (const Mode& m : modes) {
    const double theta = dot(m.k, x) - m.omega * t;
    const double sn = std::sin(theta);
    const double cs = std::cos(theta);
    out.psi += m.psi0 * sn;
    out.rho += m.rho0 * sn * sn;
    out.p += (sn * sn) * m.p_amp;
    out.phi += m.phi0 * cs * cs;
    out.E += cs * m.E_amp;
    out.B += cs * m.B_amp;
  }
  out.A = -c0 * out.p;
  return out;
}

FieldSample eval_sample(const ParticleSpec& s, const Vec3& x, double t) {
  return eval_modes({mode_of(s)}, s.constants.c0, x, t);
}

FieldSample eval_packet(const WavePacket& packet, const Vec3& x, double t) {
  return eval_modes(modes_of(packet), packet.constants().c0, x, t);
}

std::string_view channel_name(Channel c) { return kChannelNames[static_cast<std::size_t>(c)]; }

Channel channel_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kChannelCount; ++i) {
    if (kChannelNames[i] == name) return static_cast<Channel>(i);
  }
  throw Error(ErrorCode::UnknownChannel, "no channel named '" + std::string(name) + "'");
}

FieldGrid::FieldGrid(const GridGeometry& geometry) : geometry_(geometry) {
  for (auto& ch : channels_) ch = ScalarField(geometry);
}

VectorField FieldGrid::vector(Channel first) const {
  const auto i = static_cast<std::size_t>(first);
  return {channels_[i], channels_[i + 1], channels_[i + 2]};
}

FieldSample FieldGrid::sample(std::size_t index) const {
  const auto [ix, iy, iz, it] = geometry_.unravel(index);
  auto v = [&](Channel c) { return channel(c).values[index]; };
  FieldSample s;
  s.x = geometry_.position(ix, iy, iz);
  s.t = geometry_.time(it);
  s.psi = v(Channel::Psi);
  s.rho = v(Channel::Rho);
  s.p = {v(Channel::Px), v(Channel::Py), v(Channel::Pz)};
  s.phi = v(Channel::Phi);
  s.E = {v(Channel::Ex), v(Channel::Ey), v(Channel::Ez)};
  s.B = {v(Channel::Bx), v(Channel::By), v(Channel::Bz)};
  s.A = {v(Channel::Ax), v(Channel::Ay), v(Channel::Az)};
  return s;
}

bool operator==(const FieldGrid& a, const FieldGrid& b) {
  if (!(a.geometry_.dims == b.geometry_.dims)) return false;
  for (std::size_t i = 0; i < kChannelCount; ++i) {
    if (a.channels_[i].values != b.channels_[i].values) return false;
  }
  return true;
}

FieldGrid sample_grid(const FieldSource& source, const GridGeometry& geometry) {
  validate_geometry(geometry);
  const std::vector<Mode> modes = modes_of(source);
  const double c0 = constants_of(source).c0;
  FieldGrid grid(geometry);
  std::array<double*, kChannelCount> out{};
  for (std::size_t i = 0; i < kChannelCount; ++i) {
    out[i] = grid.channel(static_cast<Channel>(i)).values.data();
  }
  parallel_for(geometry.dims.total(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const auto [ix, iy, iz, it] = geometry.unravel(idx);
      const FieldSample s = eval_modes(modes, c0, geometry.position(ix, iy, iz), geometry.time(it));
      const std::array<double, kChannelCount> row = {s.psi, s.rho, s.p.x, s.p.y, s.p.z,
                                                     s.phi, s.E.x, s.E.y, s.E.z, s.B.x,
                                                     s.B.y, s.B.z, s.A.x, s.A.y, s.A.z};
      for (std::size_t c = 0; c < kChannelCount; ++c) out[c][idx] = row[c];
    }
  });
  return grid;
}

void write_csv(const FieldGrid& grid, std::ostream& out) {
  out << "x,y,z,t";
  for (auto name : kChannelNames) out << ',' << name;
  out << '\n';
  const GridGeometry& g = grid.geometry();
  std::string line;
  for (std::size_t idx = 0; idx < g.dims.total(); ++idx) {
    const auto [ix, iy, iz, it] = g.unravel(idx);
    const Vec3 x = g.position(ix, iy, iz);
    line.clear();
    line += format_double(x.x);
    line += ',';
    line += format_double(x.y);
    line += ',';
    line += format_double(x.z);
    line += ',';
    line += format_double(g.time(it));
    for (std::size_t c = 0; c < kChannelCount; ++c) {
      line += ',';
      line += format_double(grid.channel(static_cast<Channel>(c)).values[idx]);
    }
    line += '\n';
    out << line;
  }
}

}  // namespace mw
