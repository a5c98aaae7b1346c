#pragma once

#include <matterwave/model.hpp>

namespace mw {

/// Hamiltonian densities of an electron moving through an external potential.
struct InteractionState {
  double rho_el0 = 0.0;
  double xdot = 0.0;
  double phi_ext = 0.0;
  double sigma_el0 = 0.0;
  double H0 = 0.0;   // rho xdot^2 + sigma phi
  double H = 0.0;    // sigma phi
  double H_w = 0.0;  // H - H0 = -rho xdot^2
  double rho_ph0 = 0.0;  // |H_w| / c0^2
  /// The printed relation equates the negative H_w with the positive
  /// rho_ph0 c0^2; set whenever H_w != 0.
  bool sign_tension = false;
};

/// Throws InvalidArgument for rho_el0 <= 0 and SuperluminalElectron for |xdot| >= c0.
InteractionState hamiltonian_balance(double rho_el0, double xdot, double sigma_el0, double phi_ext,
                                     const Constants& constants);

struct TransferSpec {
  double A_cross = 0.0;
  double nu = 0.0;
  double tau = 0.0;  // 1 / nu
  double lambda = 0.0;
  double alpha_frac = 1.0;
};

/// Throws InvalidFrequency for nu <= 0 and InvalidArgument for other non-positive inputs.
TransferSpec make_transfer_spec(double A_cross, double nu, double lambda, double alpha_frac = 1.0);

/// dW/dt = h nu^2. Throws InvalidFrequency for nu <= 0.
double transfer_rate(const Constants& constants, double nu);

struct TransferQuantum {
  double dW = 0.0;        // A lambda rho_ph0 c0^2 over one period
  double expected = 0.0;  // alpha h nu
  double residual = 0.0;  // dW - expected
};

TransferQuantum transfer_quantum(const TransferSpec& spec, double rho_ph0, const Constants& constants);

}  // namespace mw
