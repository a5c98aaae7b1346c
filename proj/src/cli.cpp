#include <matterwave/cli.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <set>

#include <matterwave/energetics.hpp>
#include <matterwave/error.hpp>
#include <matterwave/interaction.hpp>
#include <matterwave/numeric.hpp>
#include <matterwave/relativity.hpp>
#include <matterwave/spin.hpp>

namespace mw::cli {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidConfig, what); }

void require_keys(const Json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) invalid(where + " must be an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items()) {
    if (!ok.contains(key)) invalid("unknown key '" + key + "' in " + where);
  }
}

double number(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) invalid(where + "." + key + " is required");
  const Json& v = obj.at(key);
  if (!v.is_number()) invalid(where + "." + key + " must be a number");
  return v.get<double>();
}

std::optional<double> optional_number(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) return std::nullopt;
  return number(obj, key, where);
}

// Documents built in code store positive literals as signed integers.
bool is_count(const Json& v) { return v.is_number_integer() && v.get<std::int64_t>() >= 0; }

std::uint64_t count(const Json& obj, const char* key, const std::string& where) {
  const Json& v = obj.at(key);
  if (!is_count(v)) invalid(where + "." + key + " must be a non-negative integer");
  return v.get<std::uint64_t>();
}

Vec3 vec3(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) invalid(where + "." + key + " is required");
  const Json& v = obj.at(key);
  if (!v.is_array() || v.size() != 3 || !std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_number(); })) {
    invalid(where + "." + key + " must be an array of three numbers");
  }
  return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
}

std::string text(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) invalid(where + "." + key + " is required");
  const Json& v = obj.at(key);
  if (!v.is_string()) invalid(where + "." + key + " must be a string");
  return v.get<std::string>();
}

ConstantOverrides parse_constants(const Json& obj) {
  require_keys(obj, "constants", {"c0", "hbar", "m", "e", "sigma_bar", "epsilon", "mu_perm"});
  ConstantOverrides o;
  o.c0 = optional_number(obj, "c0", "constants");
  o.hbar = optional_number(obj, "hbar", "constants");
  o.m = optional_number(obj, "m", "constants");
  o.e = optional_number(obj, "e", "constants");
  o.sigma_bar = optional_number(obj, "sigma_bar", "constants");
  o.epsilon = optional_number(obj, "epsilon", "constants");
  o.mu_perm = optional_number(obj, "mu_perm", "constants");
  return o;
}

ParticleSpec parse_particle(const Json& obj, const Constants& c, const std::string& where) {
  require_keys(obj, where, {"kind", "rho0", "u", "e_k", "omega", "V_P", "C_amp", "omega_factor"});
  const std::string kind = text(obj, "kind", where);
  const double rho0 = number(obj, "rho0", where);
  const std::optional<double> V_P = optional_number(obj, "V_P", where);
  const double C_amp = optional_number(obj, "C_amp", where).value_or(1.0);
  ParticleSpec spec;
  if (kind == "electron") {
    if (obj.contains("e_k") || obj.contains("omega")) invalid(where + ": electrons take u, not e_k/omega");
    spec = make_electron(c, rho0, vec3(obj, "u", where), V_P, C_amp);
  } else if (kind == "photon") {
    if (obj.contains("u")) invalid(where + ": photons take e_k and omega, not u");
    spec = make_photon(c, rho0, vec3(obj, "e_k", where), number(obj, "omega", where), V_P, C_amp);
  } else {
    invalid(where + ".kind must be \"electron\" or \"photon\"");
  }
  if (const auto f = optional_number(obj, "omega_factor", where)) {
    if (!(*f > 0.0)) invalid(where + ".omega_factor must be positive");
    spec = detuned(spec, *f);
  }
  return spec;
}

GridGeometry parse_grid(const Json& obj, double wavelength, double period) {
  require_keys(obj, "grid", {"origin", "t0", "dims", "h", "dt", "points_per_wavelength", "steps_per_period"});
  GridGeometry g;
  if (obj.contains("origin")) g.origin = vec3(obj, "origin", "grid");
  g.t0 = optional_number(obj, "t0", "grid").value_or(0.0);
  if (!obj.contains("dims")) invalid("grid.dims is required");
  const Json& d = obj.at("dims");
  if (!d.is_array() || d.size() != 4 || !std::all_of(d.begin(), d.end(), [](const Json& x) { return is_count(x); })) {
    invalid("grid.dims must be four non-negative integers");
  }
  g.dims = {d[0].get<std::size_t>(), d[1].get<std::size_t>(), d[2].get<std::size_t>(), d[3].get<std::size_t>()};
  const bool explicit_h = obj.contains("h");
  const bool relative_h = obj.contains("points_per_wavelength");
  if (explicit_h == relative_h) invalid("grid needs exactly one of h and points_per_wavelength");
  g.h = explicit_h ? number(obj, "h", "grid") : wavelength / number(obj, "points_per_wavelength", "grid");
  const bool explicit_dt = obj.contains("dt");
  const bool relative_dt = obj.contains("steps_per_period");
  if (explicit_dt == relative_dt) invalid("grid needs exactly one of dt and steps_per_period");
  g.dt = explicit_dt ? number(obj, "dt", "grid") : period / number(obj, "steps_per_period", "grid");
  validate_geometry(g);
  return g;
}

Tolerances parse_tolerances(const Json& obj) {
  require_keys(obj, "tolerances", {"analytic", "fd_floor", "identities"});
  Tolerances t;
  t.analytic = optional_number(obj, "analytic", "tolerances").value_or(t.analytic);
  t.fd_floor = optional_number(obj, "fd_floor", "tolerances").value_or(t.fd_floor);
  if (obj.contains("identities")) {
    const Json& ids = obj.at("identities");
    if (!ids.is_object()) invalid("tolerances.identities must be an object");
    for (const auto& [name, value] : ids.items()) {
      std::optional<Identity> id;
      for (int i = 0; i <= static_cast<int>(Identity::BoostedWaveEqRho); ++i) {
        if (to_string(static_cast<Identity>(i)) == name) id = static_cast<Identity>(i);
      }
      if (!id) invalid("unknown identity '" + name + "' in tolerances.identities");
      if (!value.is_number() || !(value.get<double>() > 0.0)) invalid("tolerance for " + name + " must be positive");
      t.analytic_overrides[*id] = value.get<double>();
    }
  }
  if (!(t.analytic > 0.0) || !(t.fd_floor > 0.0)) invalid("tolerances must be positive");
  return t;
}

void parse_boost(const Json& obj, RunConfig& cfg) {
  require_keys(obj, "boost", {"V", "beta", "betas", "alpha"});
  const int given = static_cast<int>(obj.contains("V")) + static_cast<int>(obj.contains("beta")) +
                    static_cast<int>(obj.contains("betas"));
  if (given != 1) invalid("boost needs exactly one of V, beta, betas");
  if (obj.contains("V")) cfg.betas = {number(obj, "V", "boost") / cfg.constants.c0};
  if (obj.contains("beta")) cfg.betas = {number(obj, "beta", "boost")};
  if (obj.contains("betas")) {
    const Json& b = obj.at("betas");
    if (!b.is_array() || b.empty()) invalid("boost.betas must be a non-empty array");
    for (const Json& v : b) {
      if (!v.is_number()) invalid("boost.betas entries must be numbers");
      cfg.betas.push_back(v.get<double>());
    }
  }
  cfg.alpha = optional_number(obj, "alpha", "boost");
}

Outputs parse_outputs(const Json& obj) {
  require_keys(obj, "outputs", {"report", "csv", "boost_report"});
  Outputs o;
  if (obj.contains("report")) o.report = text(obj, "report", "outputs");
  if (obj.contains("csv")) o.csv = text(obj, "csv", "outputs");
  if (obj.contains("boost_report")) o.boost_report = text(obj, "boost_report", "outputs");
  return o;
}

// --- report helpers ---

Json optional_json(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

struct Check {
  std::string identity;
  std::string method;
  double residual = 0.0;
  double tolerance = 0.0;
  std::string relation;
  Json details = Json::object();
};

Json to_json(const Check& c) {
  Json j;
  j["identity"] = c.identity;
  j["method"] = c.method;
  j["max_residual"] = std::abs(c.residual);
  j["l2_residual"] = std::abs(c.residual);
  j["convergence_ratio"] = nullptr;
  j["tolerance"] = c.tolerance;
  j["passed"] = std::abs(c.residual) <= c.tolerance;
  j["paper_ref"] = c.relation;
  if (!c.details.empty()) j["details"] = c.details;
  return j;
}

double relative(double value, double reference) {
  return reference == 0.0 ? std::abs(value) : std::abs(value) / std::abs(reference);
}

// Seeded point checks of pointwise field invariants.
std::vector<Check> randomized_checks(const RunConfig& cfg, Rng& rng) {
  const FieldSource source = cfg.source();
  const std::vector<Mode> modes = modes_of(source);
  const double c0 = cfg.constants.c0;
  const GridGeometry& g = cfg.grid;
  const Vec3 span{g.h * static_cast<double>(g.dims.nx - 1), g.h * static_cast<double>(g.dims.ny - 1),
                  g.h * static_cast<double>(g.dims.nz - 1)};
  const double t_span = g.dt * static_cast<double>(g.dims.nt - 1);

  double closure = 0.0;
  double transversal = 0.0;
  double translation = 0.0;
  double total = 0.0;
  double amp = 0.0;
  for (const Mode& m : modes) {
    total += m.phi0;
    amp += std::max({std::abs(m.psi0), m.rho0, m.phi0, norm(m.p_amp), norm(m.E_amp)});
  }
  const double u2 = common_speed(source) * common_speed(source);
  for (std::size_t i = 0; i < cfg.random_points; ++i) {
    const Vec3 x{g.origin.x + rng.uniform() * span.x, g.origin.y + rng.uniform() * span.y,
                 g.origin.z + rng.uniform() * span.z};
    const double t = g.t0 + rng.uniform() * t_span;
    const FieldSample s = eval_modes(modes, c0, x, t);
    closure = std::max(closure, relative(s.rho * u2 + s.phi - total, total));
    for (const Mode& m : modes) {
      const Vec3 e_k = normalized(m.k);
      transversal = std::max({transversal, std::abs(dot(s.E, e_k)), std::abs(dot(s.B, e_k))});
    }
    transversal = std::max(transversal, std::abs(dot(s.E, s.B)));
    if (modes.size() == 1) {
      const Mode& m = modes.front();
      const double n = std::floor(rng.uniform(1.0, 6.0));
      const double lambda = 2.0 * std::numbers::pi / norm(m.k);
      const double period = 2.0 * std::numbers::pi / m.omega;
      const FieldSample a = eval_modes(modes, c0, x + (n * lambda) * normalized(m.k), t);
      const FieldSample b = eval_modes(modes, c0, x, t + n * period);
      for (const FieldSample* o : {&a, &b}) {
        translation = std::max({translation, std::abs(o->psi - s.psi), std::abs(o->rho - s.rho),
                                std::abs(o->phi - s.phi), norm(o->p - s.p), norm(o->E - s.E)});
      }
    }
  }
  std::vector<Check> out;
  out.push_back({"EnergyClosure", "Randomized", closure, 1e-12,
                 "rho |u|^2 + phi equals the constant total intrinsic potential", {{"points", cfg.random_points}}});
  out.push_back({"Transversality", "Randomized", transversal / std::max(amp * amp, 1e-300), 1e-12,
                 "E and B orthogonal to e_k and to each other", {{"points", cfg.random_points}}});
  if (modes.size() == 1) {
    out.push_back({"TranslationInvariance", "Randomized", translation / std::max(amp, 1e-300), 1e-9,
                   "fields unchanged by translation through whole wavelengths and periods",
                   {{"points", cfg.random_points}}});
  }
  return out;
}

std::vector<Check> particle_checks(const RunConfig& cfg, const ParticleSpec& spec) {
  const Constants& c = spec.constants;
  std::vector<Check> out;
  const EnergyBreakdown e = energy_breakdown(spec, cfg.energy_samples);
  const Json energy = {{"W_K", e.W_K}, {"W_P", e.W_P}, {"W_T", e.W_T}, {"m_eff", e.m_eff},
                       {"omega_check", e.omega_check}, {"samples_per_wavelength", cfg.energy_samples}};
  out.push_back({"EnergySplit", "Quadrature", e.W_K / e.W_P - 1.0, 1e-6, "kinetic and potential energy split equally",
                 energy});
  if (spec.kind == ParticleKind::Electron) {
    out.push_back({"PlanckRelation", "Quadrature", e.W_T / (c.hbar * spec.omega) - 1.0, 1e-6,
                   "total intrinsic energy m |u|^2 equals hbar omega", energy});
    const double scale = 0.5 * c.hbar * spec.omega * std::max(std::abs(spec.psi0), 1e-300);
    out.push_back({"KineticOperator", "Analytic", kinetic_operator_check(spec) / scale, 1e-12,
                   "-(hbar^2/2m) lap psi = (hbar omega/2) psi on the plane wave", Json::object()});
    const UncertaintyResult u = uncertainty_product(c, spec.speed());
    out.push_back({"UncertaintyProduct", "ClosedForm", (u.product_xp - u.bound) / u.bound, 1e-12,
                   "position-momentum product saturates h/2",
                   {{"delta_V", u.delta_V},
                    {"delta_k", u.delta_k},
                    {"delta_x", u.delta_x},
                    {"product_xp", u.product_xp},
                    {"product_xk", u.product_xk},
                    {"bound_h_over_2", u.bound},
                    {"bound_hbar_over_2", u.bound_hbar}}});
    const InteractionState s = hamiltonian_balance(spec.rho0, spec.speed(), charge_density(c, spec.rho0), 0.0, c);
    const double kinetic = s.rho_el0 * s.xdot * s.xdot;
    out.push_back({"InteractionBalance", "ClosedForm", relative(s.rho_ph0 * c.c0 * c.c0 - kinetic, kinetic), 1e-12,
                   "photon density balancing the interaction Hamiltonian",
                   {{"H0", s.H0}, {"H", s.H}, {"H_w", s.H_w}, {"rho_ph0", s.rho_ph0}, {"sign_tension", s.sign_tension}}});
  } else {
    const PhotonEnergyResidual r = photon_energy_check(spec);
    const double scale = spec.rho0 * c.c0 * c.c0;
    out.push_back({"PhotonEinstein", "ClosedForm", std::max(std::abs(r.einstein) * c.c0 / (scale * spec.omega),
                                                            std::abs(r.potential) / scale),
                   1e-14, "photon energy relation p0 k = (omega/c0^2) phi0 with phi0 = rho0 c0^2",
                   {{"einstein", r.einstein}, {"potential", r.potential}}});
  }
  const AspectCheck a = aspect_resolution_check(c, spec.wavelength());
  out.push_back({"AspectResolution", "ClosedForm",
                 a.verdict == AspectVerdict::ViolatesUncertaintyWindow ? 0.0 : 1.0, 0.0,
                 "required resolution lambda/2 is not below the position uncertainty",
                 {{"verdict", std::string(to_string(a.verdict))},
                  {"delta_x_required", a.delta_x_required},
                  {"delta_t_required", a.delta_t_required},
                  {"qm_window", a.qm_window},
                  {"ratio", a.ratio}}});
  const SpinResult sp = spin_of(spec);
  out.push_back({"SpinProduct", "ClosedForm", (sp.product_gs - c.hbar) / c.hbar, 1e-12,
                 "g s = hbar for the intrinsic rotation",
                 {{"s", sp.s}, {"g", sp.g}, {"B_used", sp.B_used}, {"field_conversion", sp.field_conversion},
                  {"direction", {sp.direction.x, sp.direction.y, sp.direction.z}}}});
  const double nu = spec.omega / (2.0 * std::numbers::pi);
  const double rate = transfer_rate(c, nu);
  out.push_back({"TransferRate", "ClosedForm", relative(rate / nu - c.h * nu, c.h * nu), 1e-12,
                 "transfer rate h nu^2 over one period gives h nu", {{"nu", nu}, {"rate", rate}}});
  return out;
}

Json frame_json(const FrameQuantities& q) {
  return {{"rho", q.rho},     {"phi0", q.phi0}, {"V_P", q.V_P},
          {"u_x", q.u_x},     {"E0", q.E0},     {"frame_velocity", q.frame_velocity}};
}

}  // namespace

FieldSource RunConfig::source() const {
  if (packet) return *packet;
  return *particle;
}

RunConfig parse_config(const Json& doc) {
  require_keys(doc, "config",
               {"version", "units", "constants", "particle", "packet", "grid", "order", "tolerances",
                "charge_density", "energy_samples_per_wavelength", "boost", "outputs", "seed", "random_points"});
  if (!doc.contains("version") || !doc.at("version").is_number_integer() ||
      doc.at("version").get<int>() != kConfigVersion) {
    invalid("config.version must be 1");
  }
  RunConfig cfg;
  cfg.echo = doc;
  if (doc.contains("units")) {
    const std::string u = text(doc, "units", "config");
    if (u == "natural") {
      cfg.units = UnitSystem::Natural;
    } else if (u == "si") {
      cfg.units = UnitSystem::SI;
    } else {
      invalid("config.units must be \"natural\" or \"si\"");
    }
  }
  const ConstantOverrides overrides = doc.contains("constants") ? parse_constants(doc.at("constants")) : ConstantOverrides{};
  cfg.constants = make_constants(cfg.units, overrides);

  if (doc.contains("particle") == doc.contains("packet")) invalid("config needs exactly one of particle and packet");
  if (doc.contains("particle")) {
    cfg.particle = parse_particle(doc.at("particle"), cfg.constants, "particle");
  } else {
    const Json& list = doc.at("packet");
    if (!list.is_array() || list.empty()) invalid("packet must be a non-empty array");
    std::vector<ParticleSpec> comps;
    for (std::size_t i = 0; i < list.size(); ++i) {
      comps.push_back(parse_particle(list[i], cfg.constants, "packet[" + std::to_string(i) + "]"));
    }
    cfg.packet = make_packet(std::move(comps));
  }
  const ParticleSpec& lead = cfg.particle ? *cfg.particle : cfg.packet->components.front();

  if (!doc.contains("grid")) invalid("config.grid is required");
  cfg.grid = parse_grid(doc.at("grid"), lead.wavelength(), lead.period());

  if (doc.contains("order")) {
    const Json& o = doc.at("order");
    if (!o.is_number_integer() || (o.get<int>() != 2 && o.get<int>() != 4)) invalid("config.order must be 2 or 4");
    cfg.order = o.get<int>();
  }
  if (doc.contains("tolerances")) cfg.tolerances = parse_tolerances(doc.at("tolerances"));
  cfg.charge_density = optional_number(doc, "charge_density", "config").value_or(0.0);
  if (doc.contains("energy_samples_per_wavelength")) {
    cfg.energy_samples = count(doc, "energy_samples_per_wavelength", "config");
  }
  if (doc.contains("boost")) parse_boost(doc.at("boost"), cfg);
  if (doc.contains("outputs")) cfg.outputs = parse_outputs(doc.at("outputs"));
  if (doc.contains("seed")) cfg.seed = count(doc, "seed", "config");
  if (doc.contains("random_points")) cfg.random_points = count(doc, "random_points", "config");
  return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot open config file " + path.string());
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    invalid(std::string("malformed JSON: ") + e.what());
  }
  return parse_config(doc);
}

Json to_json(const ResidualReport& r) {
  Json j;
  j["identity"] = std::string(to_string(r.identity));
  j["method"] = std::string(to_string(r.method));
  j["max_residual"] = r.max_residual;
  j["l2_residual"] = r.l2_residual;
  j["convergence_ratio"] = optional_json(r.convergence_ratio);
  j["tolerance"] = r.tolerance;
  j["passed"] = r.passed;
  j["paper_ref"] = std::string(describe(r.identity));
  if (r.cross_check_residual) j["cross_check_residual"] = *r.cross_check_residual;
  if (r.coarse_residual) j["coarse_residual"] = *r.coarse_residual;
  return j;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

CommandResult run_verify(const RunConfig& cfg) {
  const FieldSource source = cfg.source();
  SuiteOptions opts;
  opts.order = cfg.order;
  opts.tolerances = cfg.tolerances;
  opts.charge_density = cfg.charge_density;
  const std::vector<ResidualReport> suite = run_suite(source, cfg.grid, opts);

  Json checks = Json::array();
  for (const ResidualReport& r : suite) checks.push_back(to_json(r));

  Rng rng(cfg.seed);
  for (const Check& c : randomized_checks(cfg, rng)) checks.push_back(to_json(c));
  if (cfg.particle) {
    for (const Check& c : particle_checks(cfg, *cfg.particle)) checks.push_back(to_json(c));
  } else {
    for (std::size_t i = 0; i < cfg.packet->size(); ++i) {
      if (cfg.packet->kind() != ParticleKind::Photon) break;
      const double scale = cfg.packet->p0[i] * cfg.packet->components[i].wavenumber();
      checks.push_back(to_json(Check{"PhotonBalance", "ClosedForm",
                                     photon_balance_residual(*cfg.packet, i) / scale, 1e-12,
                                     "per-component photon balance p0 k = (omega/c0^2) phi0",
                                     {{"component", i}}}));
    }
  }

  bool passed = true;
  for (const Json& c : checks) passed = passed && c.at("passed").get<bool>();
  CommandResult out;
  out.report["version"] = kReportVersion;
  out.report["command"] = "verify";
  out.report["config_echo"] = cfg.echo;
  out.report["seed"] = cfg.seed;
  out.report["order"] = cfg.order;
  out.report["passed"] = passed;
  out.report["checks"] = std::move(checks);
  out.passed = passed;
  return out;
}

CommandResult run_boost(const RunConfig& cfg) {
  if (!cfg.particle) invalid("boost needs a single particle");
  if (cfg.betas.empty()) invalid("boost needs a boost section");
  const ParticleSpec& spec = *cfg.particle;
  const Constants& c = cfg.constants;
  const FrameQuantities rest = frame_quantities(spec);
  const bool along_x = std::abs(spec.u.y) <= 1e-12 * spec.speed() && std::abs(spec.u.z) <= 1e-12 * spec.speed();

  Json rows = Json::array();
  Json checks = Json::array();
  bool passed = true;
  for (double beta : cfg.betas) {
    const BoostSpec b = make_boost(c, beta * c.c0);
    const FrameQuantities after = boost_frame_quantities(rest, b, cfg.alpha);
    const FrameQuantities back = boost_frame_quantities(after, make_boost(c, -b.V), cfg.alpha);
    const double e0_change = relative(after.E0 - rest.E0, rest.E0);
    const double roundtrip = std::max({relative(back.rho - rest.rho, rest.rho), relative(back.phi0 - rest.phi0, rest.phi0),
                                       relative(back.V_P - rest.V_P, rest.V_P), std::abs(back.u_x - rest.u_x) / c.c0});
    Json row;
    row["beta"] = beta;
    row["V"] = b.V;
    row["gamma"] = b.gamma;
    row["det_lambda"] = determinant(b.Lambda);
    row["before"] = frame_json(rest);
    row["after"] = frame_json(after);
    row["E0_relative_change"] = e0_change;
    row["invariant"] = e0_change <= 1e-9;
    row["roundtrip_error"] = roundtrip;
    Check energy{"EnergyInvariance", "ClosedForm", e0_change, 1e-9, "E0 = phi0 V_P is the same in both frames",
                 {{"beta", beta}}};
    Check group{"BoostRoundTrip", "ClosedForm", roundtrip, 1e-12, "boost by V then -V restores the frame quantities",
                {{"beta", beta}}};
    checks.push_back(to_json(energy));
    checks.push_back(to_json(group));
    if (along_x) {
      CheckOptions opts;
      opts.tolerances = cfg.tolerances;
      const BoostedWaveResult w = boost_wave_equation(spec, b, cfg.grid, opts, cfg.alpha);
      Json wj = to_json(w.report);
      wj["details"] = {{"beta", beta},
                       {"u_x_prime", w.u_x_prime},
                       {"density_factor", w.density_factor},
                       {"differential_scale", w.differential_scale},
                       {"scaled_max_residual", w.scaled_max_residual},
                       {"phase_velocity_residual", w.phase_velocity_residual}};
      row["wave_equation"] = wj;
      checks.push_back(wj);
    }
    rows.push_back(std::move(row));
  }
  for (const Json& ch : checks) passed = passed && ch.at("passed").get<bool>();
  CommandResult out;
  out.report["version"] = kReportVersion;
  out.report["command"] = "boost";
  out.report["config_echo"] = cfg.echo;
  out.report["seed"] = cfg.seed;
  out.report["passed"] = passed;
  out.report["rows"] = std::move(rows);
  out.report["checks"] = std::move(checks);
  out.passed = passed;
  return out;
}

void write_fields(const RunConfig& cfg, std::ostream& out) { write_csv(sample_grid(cfg.source(), cfg.grid), out); }

}  // namespace mw::cli
