#pragma once

#include <cstddef>
#include <string_view>

#include <matterwave/model.hpp>

namespace mw {

/// Energies of one particle volume at a fixed time.
struct EnergyBreakdown {
  double W_K = 0.0;  // 1/2 integral of rho |u|^2
  double W_P = 0.0;  // 1/2 integral of the potential part of phi
  double W_T = 0.0;  // W_K + W_P
  double m_eff = 0.0;  // rho_bar V_P
  double omega_check = 0.0;  // W_T / hbar
};

inline constexpr std::size_t kMinSamplesPerWavelength = 64;

/// Midpoint quadrature over a prism one wavelength long along e_k with
/// cross-section V_P / lambda. The fields only vary along e_k, so this equals
/// the volume integral over V_P exactly. Throws QuadratureTooCoarse below
/// kMinSamplesPerWavelength.
EnergyBreakdown energy_breakdown(const ParticleSpec& spec, std::size_t samples_per_wavelength = 256,
                                 double t = 0.0);

/// max |-(hbar^2 / 2m) lap psi - (hbar omega / 2) psi| over one wavelength
/// sampled along e_k at t = 0.
double kinetic_operator_check(const ParticleSpec& spec, std::size_t samples = 64);

struct UncertaintyResult {
  double delta_V = 0.0;  // potential window m u^2
  double V0 = 0.0;       // V(r') - delta_V
  double V1 = 0.0;       // V(r') + delta_V
  double k = 0.0;
  double delta_k = 0.0;  // m delta_V / (hbar^2 k)
  double lambda = 0.0;
  double delta_x = 0.0;  // lambda / 2
  double product_xp = 0.0;  // delta_x hbar delta_k
  double product_xk = 0.0;  // delta_x delta_k, always pi
  double bound = 0.0;       // h / 2
  double bound_hbar = 0.0;  // hbar / 2, the canonical form
};

/// Throws ZeroVelocity for u <= 0.
UncertaintyResult uncertainty_product(const Constants& constants, double u, double V_ref = 0.0);

enum class AspectVerdict { ViolatesUncertaintyWindow, WithinUncertaintyWindow };

std::string_view to_string(AspectVerdict v);

struct AspectCheck {
  double lambda = 0.0;
  double delta_x_required = 0.0;  // lambda / 2
  double delta_t_required = 0.0;  // tau / 2 with tau = lambda / c0
  double qm_window = 0.0;         // position uncertainty lambda / 2
  double ratio = 0.0;             // delta_x_required / qm_window
  bool strict_inequality_required = true;
  AspectVerdict verdict = AspectVerdict::ViolatesUncertaintyWindow;
};

/// A polarization measurement must resolve strictly less than half a
/// wavelength, which is exactly the position uncertainty. Throws
/// InvalidWavelength for lambda <= 0.
AspectCheck aspect_resolution_check(const Constants& constants, double lambda);

struct PhotonEnergyResidual {
  double einstein = 0.0;   // p0 |k| - (omega / c0^2) phi0
  double potential = 0.0;  // phi0 - rho0 c0^2
};

/// Throws InvalidArgument for non-photon specs.
PhotonEnergyResidual photon_energy_check(const ParticleSpec& spec);

}  // namespace mw
