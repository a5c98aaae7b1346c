#include <matterwave/interaction.hpp>

#include <cmath>

#include <matterwave/error.hpp>

namespace mw {

namespace {

bool positive(double v) { return v > 0.0 && std::isfinite(v); }

}  // namespace

InteractionState hamiltonian_balance(double rho_el0, double xdot, double sigma_el0, double phi_ext,
                                     const Constants& constants) {
  if (!positive(rho_el0)) throw Error(ErrorCode::InvalidArgument, "rho_el0 must be positive");
  if (!std::isfinite(xdot) || !std::isfinite(sigma_el0) || !std::isfinite(phi_ext)) {
    throw Error(ErrorCode::InvalidArgument, "interaction inputs must be finite");
  }
  if (std::abs(xdot) >= constants.c0) {
    throw Error(ErrorCode::SuperluminalElectron, "electron speed must stay below c0");
  }
  InteractionState s;
  s.rho_el0 = rho_el0;
  s.xdot = xdot;
  s.phi_ext = phi_ext;
  s.sigma_el0 = sigma_el0;
  const double kinetic = rho_el0 * xdot * xdot;
  s.H = sigma_el0 * phi_ext;
  s.H0 = kinetic + s.H;
  s.H_w = -kinetic;
  s.rho_ph0 = std::abs(s.H_w) / (constants.c0 * constants.c0);
  s.sign_tension = s.H_w != 0.0;
  return s;
}

TransferSpec make_transfer_spec(double A_cross, double nu, double lambda, double alpha_frac) {
  if (!positive(nu)) throw Error(ErrorCode::InvalidFrequency, "nu must be positive");
  if (!positive(A_cross) || !positive(lambda) || !positive(alpha_frac)) {
    throw Error(ErrorCode::InvalidArgument, "A_cross, lambda and alpha_frac must be positive");
  }
  return {A_cross, nu, 1.0 / nu, lambda, alpha_frac};
}

double transfer_rate(const Constants& constants, double nu) {
  if (!positive(nu)) throw Error(ErrorCode::InvalidFrequency, "nu must be positive");
  return constants.h * nu * nu;
}

TransferQuantum transfer_quantum(const TransferSpec& spec, double rho_ph0, const Constants& constants) {
  if (!(rho_ph0 >= 0.0)) throw Error(ErrorCode::InvalidArgument, "rho_ph0 must be non-negative");
  TransferQuantum q;
  q.dW = spec.A_cross * spec.lambda * rho_ph0 * constants.c0 * constants.c0;
  q.expected = spec.alpha_frac * constants.h * spec.nu;
  q.residual = q.dW - q.expected;
  return q;
}

}  // namespace mw
