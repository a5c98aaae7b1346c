#include <doctest.h>

#include <sstream>
#include <string>

#include <matterwave/cli.hpp>
#include <matterwave/error.hpp>

using namespace mw;
using mw::cli::Json;

namespace {

Json electron_doc() {
  return Json::parse(R"({
    "version": 1,
    "units": "natural",
    "constants": {"c0": 10},
    "particle": {"kind": "electron", "rho0": 2, "u": [1, 0, 0], "V_P": 1},
    "grid": {"origin": [0, 0, 0], "t0": 0, "dims": [10, 10, 10, 8],
             "points_per_wavelength": 16, "steps_per_period": 64},
    "seed": 3
  })");
}

template <class F>
ErrorCode code_of(F f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("parse a minimal electron config") {
    const cli::RunConfig c = cli::parse_config(electron_doc());
    REQUIRE(c.particle.has_value());
    CHECK_FALSE(c.packet.has_value());
    CHECK(c.constants.c0 == 10.0);
    CHECK(c.particle->omega == doctest::Approx(1.0));
    CHECK(c.grid.h == doctest::Approx(c.particle->wavelength() / 16));
    CHECK(c.grid.dt == doctest::Approx(c.particle->period() / 64));
    CHECK(c.seed == 3);
    CHECK(c.order == 2);
  }

  TEST_CASE("strict parsing") {
    Json d = electron_doc();
    d["colour"] = "red";
    CHECK(code_of([&] { cli::parse_config(d); }) == ErrorCode::InvalidConfig);
    d = electron_doc();
    d["version"] = 2;
    CHECK(code_of([&] { cli::parse_config(d); }) == ErrorCode::InvalidConfig);
    d = electron_doc();
    d["particle"]["spin"] = 1;
    CHECK(code_of([&] { cli::parse_config(d); }) == ErrorCode::InvalidConfig);
    d = electron_doc();
    d["particle"]["rho0"] = "two";
    CHECK(code_of([&] { cli::parse_config(d); }) == ErrorCode::InvalidConfig);
    d = electron_doc();
    d["grid"]["dims"] = Json::array({10, -10, 10, 8});
    CHECK(code_of([&] { cli::parse_config(d); }) == ErrorCode::InvalidConfig);
    d = electron_doc();
    d.erase("grid");
    CHECK(code_of([&] { cli::parse_config(d); }) == ErrorCode::InvalidConfig);
    d = electron_doc();
    d["particle"]["u"] = Json::array({20, 0, 0});
    CHECK(code_of([&] { cli::parse_config(d); }) == ErrorCode::SuperluminalElectron);
  }

  TEST_CASE("verify report shape") {
    const cli::CommandResult r = cli::run_verify(cli::parse_config(electron_doc()));
    CHECK(r.passed);
    CHECK(r.report["version"] == 1);
    CHECK(r.report["command"] == "verify");
    CHECK(r.report["passed"] == true);
    const Json& checks = r.report["checks"];
    REQUIRE(checks.is_array());
    CHECK(checks.size() >= 20);
    for (const Json& c : checks) {
      for (const char* key : {"identity", "method", "max_residual", "l2_residual", "convergence_ratio",
                              "tolerance", "passed", "paper_ref"}) {
        CHECK(c.contains(key));
      }
      CHECK(c["passed"].get<bool>() == (c["max_residual"].get<double>() <= c["tolerance"].get<double>()));
    }
  }

  TEST_CASE("verify is deterministic") {
    const cli::RunConfig c = cli::parse_config(electron_doc());
    CHECK(cli::dump(cli::run_verify(c).report) == cli::dump(cli::run_verify(c).report));
  }

  TEST_CASE("detuned config fails") {
    Json d = electron_doc();
    d["particle"]["omega_factor"] = 1.1;
    const cli::CommandResult r = cli::run_verify(cli::parse_config(d));
    CHECK_FALSE(r.passed);
  }

  TEST_CASE("boost command") {
    Json d = electron_doc();
    d["particle"]["u"] = Json::array({0.9, 0, 0});
    d["constants"]["c0"] = 1;
    d["boost"] = Json::parse(R"({"betas": [0.0, 0.5, 0.99]})");
    const cli::CommandResult r = cli::run_boost(cli::parse_config(d));
    CHECK(r.passed);
    d["boost"] = Json::parse(R"({"beta": 1.0})");
    CHECK(code_of([&] { cli::run_boost(cli::parse_config(d)); }) == ErrorCode::SuperluminalBoost);
  }

  TEST_CASE("fields csv") {
    Json d = electron_doc();
    d["grid"]["dims"] = Json::array({5, 5, 5, 5});
    std::ostringstream out;
    cli::write_fields(cli::parse_config(d), out);
    const std::string s = out.str();
    std::size_t lines = 0;
    for (char ch : s) lines += ch == '\n';
    CHECK(lines == 5 * 5 * 5 * 5 + 1);
  }
}
