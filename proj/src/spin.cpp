#include <matterwave/spin.hpp>

#include <cmath>

#include <matterwave/analytic.hpp>
#include <matterwave/error.hpp>
#include <matterwave/fields.hpp>

namespace mw {

namespace {

void require_frequency(double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw Error(ErrorCode::InvalidFrequency, "spin needs a positive finite omega");
  }
}

void require_factor(int factor) {
  if (factor != 1 && factor != 2) throw Error(ErrorCode::InvalidFactor, "curl factor must be 1 or 2");
}

SpinResult spin_from(const Constants& c, ParticleKind kind, double W, double B_rot, double s) {
  SpinResult r;
  r.kind = kind;
  r.W = W;
  r.B_rot = B_rot;
  r.field_conversion = c.c0;
  r.B_used = c.c0 * B_rot;
  r.product_gs = W / ((c.e / (2.0 * c.m * c.c0)) * r.B_used);
  r.s = s;
  r.g = r.product_gs / s;
  return r;
}

}  // namespace

SpinResult spin_photon(const Constants& c, double omega) {
  require_frequency(omega);
  return spin_from(c, ParticleKind::Photon, c.hbar * omega, 2.0 * (c.m / c.e) * omega, c.hbar);
}

SpinResult spin_electron(const Constants& c, double omega) {
  require_frequency(omega);
  // Two spin states share the product g s = hbar.
  return spin_from(c, ParticleKind::Electron, 0.5 * c.hbar * omega, (c.m / c.e) * omega, 0.5 * c.hbar);
}

SpinResult spin_of(const ParticleSpec& spec) {
  SpinResult r = spec.kind == ParticleKind::Photon ? spin_photon(spec.constants, spec.omega)
                                                   : spin_electron(spec.constants, spec.omega);
  r.direction = normalized(spec.e_b());
  return r;
}

VectorEvaluator magnetic_field_from_curl(const ParticleSpec& spec, int factor) {
  require_factor(factor);
  const std::vector<Mode> modes = {mode_of(spec)};
  const double c0 = spec.constants.c0;
  const double scale = -1.0 / (factor * spec.constants.sigma_bar);
  return [modes, c0, scale](const Vec3& x, double t) { return scale * eval_jets(modes, c0, x, t).p.curl; };
}

VectorEvaluator magnetic_field_from_curl(const MomentumJacobian& jacobian, double sigma_bar, int factor) {
  require_factor(factor);
  if (!(sigma_bar > 0.0)) throw Error(ErrorCode::InvalidArgument, "sigma_bar must be positive");
  const double scale = -1.0 / (factor * sigma_bar);
  return [jacobian, scale](const Vec3& x, double t) {
    const std::array<Vec3, 3> d = jacobian(x, t);
    const Vec3 c{d[1].z - d[2].y, d[2].x - d[0].z, d[0].y - d[1].x};
    return scale * c;
  };
}

MomentumJacobian RigidRotation::jacobian() const {
  const double r = rho_bar;
  const Vec3 w = omega;
  // d/dx_i (w x x) = w x e_i
  return [r, w](const Vec3&, double) {
    return std::array<Vec3, 3>{r * cross(w, Vec3{1, 0, 0}), r * cross(w, Vec3{0, 1, 0}),
                               r * cross(w, Vec3{0, 0, 1})};
  };
}

}  // namespace mw
