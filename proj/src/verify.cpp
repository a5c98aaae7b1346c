#include <matterwave/verify.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include <matterwave/analytic.hpp>
#include <matterwave/diffops.hpp>
#include <matterwave/error.hpp>
#include <matterwave/numeric.hpp>

namespace mw {

namespace {

constexpr std::array<Identity, 10> kSuiteIdentities = {
    Identity::WaveEqPsi,       Identity::WaveEqRho,        Identity::WaveEqP,
    Identity::Continuity,      Identity::Faraday,          Identity::AmpereSubluminal,
    Identity::AmpereInhomogeneous, Identity::DivB,         Identity::GaussD,
    Identity::LorentzCondition};

struct Params {
  double inv_u2 = 0.0;
  double c0 = 1.0;
  double eps = 1.0;
  double mu = 1.0;
  double sigma = 0.0;
  bool luminal = false;
};

Params params_for(const FieldSource& source, double sigma) {
  const double u = common_speed(source);
  if (!(u > 0.0)) throw Error(ErrorCode::ZeroVelocity, "identity checks need |u| > 0");
  const Constants& c = constants_of(source);
  Params p;
  p.inv_u2 = 1.0 / (u * u);
  p.c0 = c.c0;
  p.eps = c.epsilon;
  p.mu = c.mu_perm;
  p.sigma = sigma;
  p.luminal = std::abs(u - c.c0) <= 1e-12 * c.c0;
  return p;
}

double analytic_residual(Identity id, const FieldJets& j, const Params& p) {
  switch (id) {
    case Identity::WaveEqPsi: return std::abs(j.psi.lap - p.inv_u2 * j.psi.dtt);
    case Identity::WaveEqRho: return std::abs(j.rho.lap - p.inv_u2 * j.rho.dtt);
    case Identity::WaveEqP: return norm(j.p.lap - p.inv_u2 * j.p.dtt);
    case Identity::Continuity: return std::abs(j.p.div + j.rho.dt);
    case Identity::Faraday: return norm(j.E.curl + j.B.dt);
    case Identity::AmpereSubluminal: return norm(p.inv_u2 * j.E.dt - j.B.curl);
    case Identity::AmpereInhomogeneous: return norm(p.eps * j.E.dt - (1.0 / p.mu) * j.B.curl);
    case Identity::DivB: return std::abs(j.B.div);
    case Identity::GaussD: return std::abs(p.eps * j.E.div - p.sigma);
    case Identity::LorentzCondition:
    case Identity::BoostedWaveEqRho: break;
  }
  return std::abs(p.inv_u2 * j.phi.dt - j.p.div);
}

double gauge_residual(const FieldJets& j, const Params& p) {
  return std::abs(j.A.div + j.phi.dt / p.c0);
}

ScalarField magnitude(const VectorField& v) {
  ScalarField out(v[0].geometry);
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    const double a = v[0].values[i];
    const double b = v[1].values[i];
    const double c = v[2].values[i];
    out.values[i] = std::sqrt(a * a + b * b + c * c);
  }
  return out;
}

ScalarField absolute(ScalarField f) {
  for (double& v : f.values) v = std::abs(v);
  return f;
}

ScalarField wave_residual(const ScalarField& f, const StencilConfig& cfg, double inv_u2) {
  return combine(1.0, laplacian(f, cfg), -inv_u2, d2_dt2(f, cfg));
}

VectorField dt_vec(const VectorField& f, const StencilConfig& cfg) {
  return {d_dt(f[0], cfg), d_dt(f[1], cfg), d_dt(f[2], cfg)};
}

ScalarField fd_residual(Identity id, const FieldGrid& g, const StencilConfig& cfg, const Params& p) {
  switch (id) {
    case Identity::WaveEqPsi: return absolute(wave_residual(g.channel(Channel::Psi), cfg, p.inv_u2));
    case Identity::WaveEqRho: return absolute(wave_residual(g.channel(Channel::Rho), cfg, p.inv_u2));
    case Identity::WaveEqP: {
      const VectorField pv = g.vector(Channel::Px);
      return magnitude({wave_residual(pv[0], cfg, p.inv_u2), wave_residual(pv[1], cfg, p.inv_u2),
                        wave_residual(pv[2], cfg, p.inv_u2)});
    }
    case Identity::Continuity:
      return absolute(combine(1.0, div(g.vector(Channel::Px), cfg), 1.0, d_dt(g.channel(Channel::Rho), cfg)));
    case Identity::Faraday:
      return magnitude(combine(1.0, curl(g.vector(Channel::Ex), cfg), 1.0, dt_vec(g.vector(Channel::Bx), cfg)));
    case Identity::AmpereSubluminal:
      return magnitude(combine(p.inv_u2, dt_vec(g.vector(Channel::Ex), cfg), -1.0, curl(g.vector(Channel::Bx), cfg)));
    case Identity::AmpereInhomogeneous:
      return magnitude(
          combine(p.eps, dt_vec(g.vector(Channel::Ex), cfg), -1.0 / p.mu, curl(g.vector(Channel::Bx), cfg)));
    case Identity::DivB: return absolute(div(g.vector(Channel::Bx), cfg));
    case Identity::GaussD: {
      ScalarField d = scaled(p.eps, div(g.vector(Channel::Ex), cfg));
      for (double& v : d.values) v = std::abs(v - p.sigma);
      return d;
    }
    case Identity::LorentzCondition:
    case Identity::BoostedWaveEqRho: break;
  }
  return absolute(combine(p.inv_u2, d_dt(g.channel(Channel::Phi), cfg), -1.0, div(g.vector(Channel::Px), cfg)));
}

ScalarField fd_gauge_residual(const FieldGrid& g, const StencilConfig& cfg, const Params& p) {
  return absolute(combine(1.0, div(g.vector(Channel::Ax), cfg), 1.0 / p.c0, d_dt(g.channel(Channel::Phi), cfg)));
}

// Offset (in fine-lattice steps) of the coarse lattice origin, and the number
// of coarse points whose image lands inside the fine lattice.
struct AxisMatch {
  std::size_t offset = 0;
  std::size_t count = 0;
};

std::optional<AxisMatch> match_axis(double coarse_origin, double fine_origin, double fine_step,
                                    std::size_t coarse_n, std::size_t fine_n) {
  const double shift = (coarse_origin - fine_origin) / fine_step;
  const double rounded = std::round(shift);
  if (rounded < 0.0 || std::abs(shift - rounded) > 1e-6) return std::nullopt;
  const auto offset = static_cast<std::size_t>(rounded);
  if (offset >= fine_n) return std::nullopt;
  const std::size_t count = std::min(coarse_n, (fine_n - offset - 1) / 2 + 1);
  return AxisMatch{offset, count};
}

struct Coincident {
  std::vector<double> coarse;
  std::vector<double> fine;
};

std::optional<Coincident> coincident_values(const ScalarField& coarse, const ScalarField& fine) {
  const GridGeometry& gc = coarse.geometry;
  const GridGeometry& gf = fine.geometry;
  std::array<AxisMatch, 4> m;
  const std::array<double, 4> oc = {gc.origin.x, gc.origin.y, gc.origin.z, gc.t0};
  const std::array<double, 4> of = {gf.origin.x, gf.origin.y, gf.origin.z, gf.t0};
  for (int a = 0; a < 4; ++a) {
    const double step = a == 3 ? gf.dt : gf.h;
    auto r = match_axis(oc[a], of[a], step, gc.dims[a], gf.dims[a]);
    if (!r || r->count == 0) return std::nullopt;
    m[a] = *r;
  }
  Coincident out;
  const std::size_t n = m[0].count * m[1].count * m[2].count * m[3].count;
  out.coarse.reserve(n);
  out.fine.reserve(n);
  for (std::size_t ix = 0; ix < m[0].count; ++ix) {
    for (std::size_t iy = 0; iy < m[1].count; ++iy) {
      for (std::size_t iz = 0; iz < m[2].count; ++iz) {
        for (std::size_t it = 0; it < m[3].count; ++it) {
          out.coarse.push_back(coarse.at(ix, iy, iz, it));
          out.fine.push_back(fine.at(m[0].offset + 2 * ix, m[1].offset + 2 * iy, m[2].offset + 2 * iz,
                                     m[3].offset + 2 * it));
        }
      }
    }
  }
  return out;
}

ResidualReport make_analytic_report(Identity id, const std::vector<double>& magnitudes, double tol) {
  const ResidualField s = summarize(magnitudes);
  ResidualReport r;
  r.identity = id;
  r.method = Method::Analytic;
  r.max_residual = s.max;
  r.l2_residual = s.rms;
  r.tolerance = tol;
  r.passed = s.max <= tol;
  return r;
}

// Analytic reports for `ids`, from one pass over the lattice.
std::vector<ResidualReport> analytic_reports(const FieldSource& source, const GridGeometry& grid,
                                             const std::vector<Identity>& ids, const Params& p,
                                             const Tolerances& tol) {
  validate_geometry(grid);
  const std::vector<Mode> modes = modes_of(source);
  const std::size_t n = grid.dims.total();
  const bool gauge = p.luminal &&
                     std::find(ids.begin(), ids.end(), Identity::LorentzCondition) != ids.end();
  std::vector<std::vector<double>> cols(ids.size(), std::vector<double>(n));
  std::vector<double> gauge_col(gauge ? n : 0);
  parallel_for(n, [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const auto [ix, iy, iz, it] = grid.unravel(idx);
      const FieldJets j = eval_jets(modes, p.c0, grid.position(ix, iy, iz), grid.time(it));
      for (std::size_t c = 0; c < ids.size(); ++c) cols[c][idx] = analytic_residual(ids[c], j, p);
      if (gauge) gauge_col[idx] = gauge_residual(j, p);
    }
  });
  std::vector<ResidualReport> out;
  for (std::size_t c = 0; c < ids.size(); ++c) {
    out.push_back(make_analytic_report(ids[c], cols[c], tol.analytic_for(ids[c])));
    if (gauge && ids[c] == Identity::LorentzCondition) {
      out.back().cross_check_residual = summarize(gauge_col).max;
    }
  }
  return out;
}

struct GridPair {
  FieldGrid coarse;
  FieldGrid fine;
};

GridPair sample_pair(const FieldSource& source, const GridGeometry& grid) {
  return {sample_grid(source, grid), sample_grid(source, grid.refined())};
}

std::vector<ResidualReport> fd_reports(const GridPair& grids, const std::vector<Identity>& ids,
                                       const Params& p, int order, double floor) {
  const StencilConfig cc = StencilConfig::for_grid(grids.coarse.geometry(), order);
  const StencilConfig cf = StencilConfig::for_grid(grids.fine.geometry(), order);
  validate(cc);
  std::vector<ResidualReport> out;
  for (Identity id : ids) {
    ResidualReport r = make_fd_report(id, fd_residual(id, grids.coarse, cc, p),
                                      fd_residual(id, grids.fine, cf, p), order, floor);
    if (id == Identity::LorentzCondition && p.luminal) {
      const ResidualReport g = make_fd_report(id, fd_gauge_residual(grids.coarse, cc, p),
                                              fd_gauge_residual(grids.fine, cf, p), order, floor);
      r.cross_check_residual = g.max_residual;
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<ResidualReport> run_checks(const FieldSource& source, const GridGeometry& grid,
                                       const CheckOptions& options, const std::vector<Identity>& ids) {
  const Params p = params_for(source, options.charge_density);
  if (options.method == Method::Analytic) {
    return analytic_reports(source, grid, ids, p, options.tolerances);
  }
  validate(StencilConfig::for_grid(grid, options.order));
  return fd_reports(sample_pair(source, grid), ids, p, options.order, options.tolerances.fd_floor);
}

}  // namespace

std::string_view to_string(Identity id) {
  switch (id) {
    case Identity::WaveEqPsi: return "WaveEqPsi";
    case Identity::WaveEqRho: return "WaveEqRho";
    case Identity::WaveEqP: return "WaveEqP";
    case Identity::Continuity: return "Continuity";
    case Identity::Faraday: return "Faraday";
    case Identity::AmpereSubluminal: return "AmpereSubluminal";
    case Identity::AmpereInhomogeneous: return "AmpereInhomogeneous";
    case Identity::DivB: return "DivB";
    case Identity::GaussD: return "GaussD";
    case Identity::LorentzCondition: return "LorentzCondition";
    case Identity::BoostedWaveEqRho: return "BoostedWaveEqRho";
  }
  return "?";
}

std::string_view to_string(Method m) {
  return m == Method::Analytic ? "Analytic" : "FiniteDifference";
}

std::string_view describe(Identity id) {
  switch (id) {
    case Identity::WaveEqPsi: return "wave equation for the matter wave psi";
    case Identity::WaveEqRho: return "wave equation for the density rho";
    case Identity::WaveEqP: return "wave equation for the momentum density p";
    case Identity::Continuity: return "continuity equation div p + drho/dt = 0";
    case Identity::Faraday: return "induction law curl E + dB/dt = 0";
    case Identity::AmpereSubluminal: return "subluminal Ampere law (1/u^2) dE/dt = curl B";
    case Identity::AmpereInhomogeneous: return "inhomogeneous Ampere law dD/dt + J = curl H";
    case Identity::DivB: return "source equation div B = 0";
    case Identity::GaussD: return "source equation div D = sigma";
    case Identity::LorentzCondition: return "Lorentz condition (1/u^2) dphi/dt = div p";
    case Identity::BoostedWaveEqRho: return "wave equation for rho in the moving frame";
  }
  return "";
}

double Tolerances::analytic_for(Identity id) const {
  const auto it = analytic_overrides.find(id);
  return it == analytic_overrides.end() ? analytic : it->second;
}

ResidualField summarize(const std::vector<double>& magnitudes) {
  ResidualField s;
  if (magnitudes.empty()) return s;
  std::vector<double> sq(magnitudes.size());
  for (std::size_t i = 0; i < magnitudes.size(); ++i) {
    s.max = std::max(s.max, magnitudes[i]);
    sq[i] = magnitudes[i] * magnitudes[i];
  }
  // NaN compares false against max; surface it explicitly.
  for (double v : magnitudes) {
    if (std::isnan(v)) s.max = v;
  }
  s.rms = std::sqrt(pairwise_sum(sq) / static_cast<double>(sq.size()));
  return s;
}

ResidualReport make_fd_report(Identity id, const ScalarField& coarse, const ScalarField& fine, int order,
                              double floor) {
  ResidualField rc;
  ResidualField rf;
  if (auto co = coincident_values(coarse, fine)) {
    rc = summarize(co->coarse);
    rf = summarize(co->fine);
  } else {
    rc = summarize(coarse.values);
    rf = summarize(fine.values);
  }
  const double gain = std::pow(2.0, order);
  ResidualReport r;
  r.identity = id;
  r.method = Method::FiniteDifference;
  r.max_residual = rf.max;
  r.l2_residual = rf.rms;
  r.coarse_residual = rc.max;
  r.tolerance = std::max(rc.max / (0.875 * gain), floor);
  if (rc.max > floor || rf.max > floor) r.convergence_ratio = rc.max / rf.max;
  r.passed = rf.max <= r.tolerance;
  return r;
}

std::vector<ResidualReport> check_wave_equation(const FieldSource& source, const GridGeometry& grid,
                                                const CheckOptions& options) {
  return run_checks(source, grid, options, {Identity::WaveEqPsi, Identity::WaveEqRho, Identity::WaveEqP});
}

ResidualReport check_continuity(const FieldSource& source, const GridGeometry& grid,
                                const CheckOptions& options) {
  return run_checks(source, grid, options, {Identity::Continuity}).front();
}

ResidualReport check_faraday(const FieldSource& source, const GridGeometry& grid,
                             const CheckOptions& options) {
  return run_checks(source, grid, options, {Identity::Faraday}).front();
}

ResidualReport check_ampere_subluminal(const FieldSource& source, const GridGeometry& grid,
                                       const CheckOptions& options) {
  return run_checks(source, grid, options, {Identity::AmpereSubluminal}).front();
}

ResidualReport check_ampere_inhomogeneous(const FieldSource& source, const GridGeometry& grid,
                                          const CheckOptions& options) {
  return run_checks(source, grid, options, {Identity::AmpereInhomogeneous}).front();
}

std::vector<ResidualReport> check_sources(const FieldSource& source, const GridGeometry& grid,
                                          const CheckOptions& options) {
  return run_checks(source, grid, options, {Identity::DivB, Identity::GaussD});
}

ResidualReport check_lorentz_condition(const FieldSource& source, const GridGeometry& grid,
                                       const CheckOptions& options) {
  return run_checks(source, grid, options, {Identity::LorentzCondition}).front();
}

std::vector<ResidualReport> run_suite(const FieldSource& source, const GridGeometry& grid,
                                      const SuiteOptions& options) {
  const Params p = params_for(source, options.charge_density);
  validate(StencilConfig::for_grid(grid, options.order));
  const std::vector<Identity> ids(kSuiteIdentities.begin(), kSuiteIdentities.end());
  std::vector<ResidualReport> out = analytic_reports(source, grid, ids, p, options.tolerances);
  std::vector<ResidualReport> fd =
      fd_reports(sample_pair(source, grid), ids, p, options.order, options.tolerances.fd_floor);
  out.insert(out.end(), fd.begin(), fd.end());
  return out;
}

bool all_passed(const std::vector<ResidualReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const ResidualReport& r) { return r.passed; });
}

const ResidualReport* find_report(const std::vector<ResidualReport>& reports, Identity id, Method m) {
  for (const ResidualReport& r : reports) {
    if (r.identity == id && r.method == m) return &r;
  }
  return nullptr;
}

}  // namespace mw
