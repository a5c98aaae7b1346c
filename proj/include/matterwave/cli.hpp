#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include <matterwave/fields.hpp>
#include <matterwave/grid.hpp>
#include <matterwave/model.hpp>
#include <matterwave/verify.hpp>

namespace mw::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kConfigVersion = 1;
inline constexpr int kReportVersion = 1;

enum ExitCode : int { kAllPassed = 0, kSomeFailed = 1, kInvalidConfig = 2 };

struct Outputs {
  std::string report = "report.json";
  std::string csv = "fields.csv";
  std::string boost_report = "boost.json";
};

/// Parsed configuration. Exactly one of `particle` / `packet` is set.
struct RunConfig {
  Json echo;
  UnitSystem units = UnitSystem::Natural;
  Constants constants;
  std::optional<ParticleSpec> particle;
  std::optional<WavePacket> packet;
  GridGeometry grid;
  int order = 2;
  Tolerances tolerances;
  double charge_density = 0.0;
  std::size_t energy_samples = 256;
  std::vector<double> betas;  // boost speeds in units of c0
  std::optional<double> alpha;
  Outputs outputs;
  std::uint64_t seed = 0;
  std::size_t random_points = 64;

  FieldSource source() const;
};

/// Strict parse: unknown keys, wrong types and a version other than 1 throw
/// mw::Error(InvalidConfig); model construction errors propagate unchanged.
RunConfig parse_config(const Json& doc);
RunConfig load_config(const std::filesystem::path& path);

struct CommandResult {
  Json report;
  bool passed = false;
};

/// Identity suite plus energetics, spin, interaction and seeded
/// randomized property checks.
CommandResult run_verify(const RunConfig& config);
/// Frame quantities before and after each configured boost, with the
/// energy-invariance verdict and the moving-frame wave equation.
CommandResult run_boost(const RunConfig& config);
void write_fields(const RunConfig& config, std::ostream& out);

/// JSON object for one residual report in the report schema.
Json to_json(const ResidualReport& r);

/// Serialized form written to disk (two-space indent, trailing newline).
std::string dump(const Json& doc);

}  // namespace mw::cli
