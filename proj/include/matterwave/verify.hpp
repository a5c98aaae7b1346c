#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <matterwave/fields.hpp>
#include <matterwave/grid.hpp>

namespace mw {

enum class Identity {
  WaveEqPsi,
  WaveEqRho,
  WaveEqP,
  Continuity,
  Faraday,
  AmpereSubluminal,
  AmpereInhomogeneous,
  DivB,
  GaussD,
  LorentzCondition,
  BoostedWaveEqRho,
};

enum class Method { Analytic, FiniteDifference };

std::string_view to_string(Identity id);
std::string_view to_string(Method m);
/// Short human-readable statement of the relation an identity checks.
std::string_view describe(Identity id);

/// Residual of one differential identity over a lattice.
///
/// Analytic reports use closed-form derivatives at every lattice point and
/// pass when max_residual <= tolerance. Finite-difference reports evaluate the
/// identity with central differences on the lattice (spacing h) and on its
/// refinement (h/2, same point counts); norms are taken over the points both
/// interiors share. With C = r(h) / h^p the tolerance is C (h/2)^p / 0.875,
/// so a pass means the residual shrinks by at least 3.5 (p = 2) or 14 (p = 4),
/// or both residuals sit under the roundoff floor.
struct ResidualReport {
  Identity identity = Identity::WaveEqPsi;
  Method method = Method::Analytic;
  double max_residual = 0.0;
  double l2_residual = 0.0;  // root mean square
  std::optional<double> convergence_ratio;
  double tolerance = 0.0;
  bool passed = false;
  /// Gauge form div A + (1/c0) dphi/dt, evaluated for LorentzCondition when |u| = c0.
  std::optional<double> cross_check_residual;
  /// Max residual on the coarse lattice (finite differences only).
  std::optional<double> coarse_residual;
};

struct Tolerances {
  double analytic = 1e-10;
  double fd_floor = 1e-9;
  std::map<Identity, double> analytic_overrides;

  double analytic_for(Identity id) const;
};

struct CheckOptions {
  Method method = Method::Analytic;
  int order = 2;
  Tolerances tolerances;
  /// Free charge density sigma compared against div D; zero for free fields.
  double charge_density = 0.0;
};

/// Delta f - (1/|u|^2) d2f/dt2 for f = psi, rho, p (three reports, that order).
std::vector<ResidualReport> check_wave_equation(const FieldSource& source, const GridGeometry& grid,
                                                const CheckOptions& options);
/// div p + drho/dt.
ResidualReport check_continuity(const FieldSource& source, const GridGeometry& grid,
                                const CheckOptions& options);
/// curl E + dB/dt on the transversal fields.
ResidualReport check_faraday(const FieldSource& source, const GridGeometry& grid,
                             const CheckOptions& options);
/// (1/|u|^2) dE/dt - curl B.
ResidualReport check_ampere_subluminal(const FieldSource& source, const GridGeometry& grid,
                                       const CheckOptions& options);
/// J + dD/dt - curl H with J = 0, D = eps E, H = B / mu.
ResidualReport check_ampere_inhomogeneous(const FieldSource& source, const GridGeometry& grid,
                                          const CheckOptions& options);
/// div B (first report) and div D - sigma (second report).
std::vector<ResidualReport> check_sources(const FieldSource& source, const GridGeometry& grid,
                                          const CheckOptions& options);
/// (1/|u|^2) dphi/dt - div p, with the gauge cross-check when |u| = c0.
ResidualReport check_lorentz_condition(const FieldSource& source, const GridGeometry& grid,
                                       const CheckOptions& options);

struct SuiteOptions {
  int order = 2;
  Tolerances tolerances;
  double charge_density = 0.0;
};

/// All ten identities, analytic reports first then finite-difference ones,
/// each block ordered by Identity.
std::vector<ResidualReport> run_suite(const FieldSource& source, const GridGeometry& grid,
                                      const SuiteOptions& options);

bool all_passed(const std::vector<ResidualReport>& reports);

const ResidualReport* find_report(const std::vector<ResidualReport>& reports, Identity id, Method m);

// Shared with the relativity module.

struct ResidualField {
  double max = 0.0;
  double rms = 0.0;
};

/// Max and RMS of pointwise residual magnitudes (pairwise-summed).
ResidualField summarize(const std::vector<double>& magnitudes);

/// Builds the finite-difference report from residual magnitudes on the
/// interiors of a lattice (coarse) and of its refinement (fine).
ResidualReport make_fd_report(Identity id, const ScalarField& coarse, const ScalarField& fine,
                              int order, double floor);

}  // namespace mw
