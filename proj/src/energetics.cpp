#include <matterwave/energetics.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <matterwave/analytic.hpp>
#include <matterwave/error.hpp>
#include <matterwave/fields.hpp>
#include <matterwave/numeric.hpp>

namespace mw {

EnergyBreakdown energy_breakdown(const ParticleSpec& spec, std::size_t samples_per_wavelength, double t) {
  if (samples_per_wavelength < kMinSamplesPerWavelength) {
    throw Error(ErrorCode::QuadratureTooCoarse, "energy quadrature needs at least 64 samples per wavelength");
  }
  const double lambda = spec.wavelength();
  const double ds = lambda / static_cast<double>(samples_per_wavelength);
  const double section = spec.V_P / lambda;
  const double u2 = dot(spec.u, spec.u);
  std::vector<double> kinetic(samples_per_wavelength);
  std::vector<double> potential(samples_per_wavelength);
  parallel_for(samples_per_wavelength, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const Vec3 x = ((static_cast<double>(i) + 0.5) * ds) * spec.e_k;
      kinetic[i] = eval_rho(spec, x, t) * u2;
      potential[i] = eval_phi_intrinsic(spec, x, t);
    }
  });
  EnergyBreakdown e;
  e.W_K = 0.5 * pairwise_sum(kinetic) * ds * section;
  e.W_P = 0.5 * pairwise_sum(potential) * ds * section;
  e.W_T = e.W_K + e.W_P;
  e.m_eff = 0.5 * spec.rho0 * spec.V_P;
  e.omega_check = e.W_T / spec.constants.hbar;
  return e;
}

double kinetic_operator_check(const ParticleSpec& spec, std::size_t samples) {
  const Constants& c = spec.constants;
  const std::vector<Mode> modes = {mode_of(spec)};
  const double lambda = spec.wavelength();
  double worst = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const Vec3 x = ((static_cast<double>(i) + 0.5) * lambda / static_cast<double>(samples)) * spec.e_k;
    const FieldJets j = eval_jets(modes, c.c0, x, 0.0);
    const double lhs = -(c.hbar * c.hbar / (2.0 * c.m)) * j.psi.lap;
    const double rhs = 0.5 * c.hbar * spec.omega * j.psi.value;
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

UncertaintyResult uncertainty_product(const Constants& constants, double u, double V_ref) {
  if (!(u > 0.0)) throw Error(ErrorCode::ZeroVelocity, "uncertainty product needs u > 0");
  const double m = constants.m;
  const double hbar = constants.hbar;
  UncertaintyResult r;
  r.delta_V = m * u * u;
  r.V0 = V_ref - r.delta_V;
  r.V1 = V_ref + r.delta_V;
  r.k = m * u / hbar;
  r.delta_k = m * r.delta_V / (hbar * hbar * r.k);
  r.lambda = 2.0 * std::numbers::pi / r.k;
  r.delta_x = 0.5 * r.lambda;
  r.product_xp = r.delta_x * hbar * r.delta_k;
  r.product_xk = r.delta_x * r.delta_k;
  r.bound = 0.5 * constants.h;
  r.bound_hbar = 0.5 * hbar;
  return r;
}

std::string_view to_string(AspectVerdict v) {
  return v == AspectVerdict::ViolatesUncertaintyWindow ? "ViolatesUncertaintyWindow"
                                                        : "WithinUncertaintyWindow";
}

AspectCheck aspect_resolution_check(const Constants& constants, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::InvalidWavelength, "wavelength must be positive and finite");
  }
  AspectCheck a;
  a.lambda = lambda;
  a.delta_x_required = 0.5 * lambda;
  a.delta_t_required = 0.5 * lambda / constants.c0;
  a.qm_window = 0.5 * lambda;
  a.ratio = a.delta_x_required / a.qm_window;
  a.verdict = a.delta_x_required < a.qm_window ? AspectVerdict::WithinUncertaintyWindow
                                               : AspectVerdict::ViolatesUncertaintyWindow;
  return a;
}

PhotonEnergyResidual photon_energy_check(const ParticleSpec& spec) {
  if (spec.kind != ParticleKind::Photon) {
    throw Error(ErrorCode::InvalidArgument, "photon_energy_check needs a photon spec");
  }
  const double c0 = spec.constants.c0;
  const double p0 = spec.rho0 * spec.speed();
  PhotonEnergyResidual r;
  r.einstein = p0 * spec.wavenumber() - (spec.omega / (c0 * c0)) * spec.phi0;
  r.potential = spec.phi0 - spec.rho0 * c0 * c0;
  return r;
}

}  // namespace mw
