// mwcheck: verify the matter-wave identities, dump sampled fields, or check
// boost invariance for a JSON configuration.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include <matterwave/cli.hpp>
#include <matterwave/error.hpp>

namespace fs = std::filesystem;
using namespace mw::cli;

namespace {

struct Args {
  std::string config;
  std::string out = ".";
  std::optional<int> order;
  std::optional<std::uint64_t> seed;
};

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw mw::Error(mw::ErrorCode::InvalidConfig, "cannot write " + path.string());
  f << content;
}

int run(const std::string& command, const Args& args) {
  RunConfig cfg = load_config(args.config);
  if (args.order) {
    if (*args.order != 2 && *args.order != 4) throw mw::Error(mw::ErrorCode::InvalidConfig, "--order must be 2 or 4");
    cfg.order = *args.order;
  }
  if (args.seed) cfg.seed = *args.seed;

  const fs::path out_dir(args.out);
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw mw::Error(mw::ErrorCode::InvalidConfig, "cannot create output directory " + args.out);

  if (command == "fields") {
    std::ofstream f(out_dir / cfg.outputs.csv, std::ios::binary);
    if (!f) throw mw::Error(mw::ErrorCode::InvalidConfig, "cannot write " + cfg.outputs.csv);
    write_fields(cfg, f);
    std::cout << "wrote " << (out_dir / cfg.outputs.csv).string() << "\n";
    return kAllPassed;
  }

  const CommandResult result = command == "verify" ? run_verify(cfg) : run_boost(cfg);
  const fs::path target = out_dir / (command == "verify" ? cfg.outputs.report : cfg.outputs.boost_report);
  write_file(target, dump(result.report));
  std::size_t failed = 0;
  for (const auto& c : result.report.at("checks")) {
    if (!c.at("passed").get<bool>()) {
      ++failed;
      std::cout << "FAIL " << c.at("identity").get<std::string>() << " (" << c.at("method").get<std::string>()
                << ")\n";
    }
  }
  std::cout << result.report.at("checks").size() - failed << "/" << result.report.at("checks").size()
            << " checks passed; report: " << target.string() << "\n";
  return result.passed ? kAllPassed : kSomeFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matter-wave identity checks"};
  app.require_subcommand(1);
  Args args;
  std::string command;
  for (const char* name : {"verify", "fields", "boost"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", args.config, "JSON configuration")->required();
    sub->add_option("--out", args.out, "output directory");
    sub->add_option("--order", args.order, "finite-difference order (2 or 4)");
    sub->add_option("--seed", args.seed, "seed for randomized checks");
    sub->callback([&command, name] { command = name; });
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalidConfig;
  }
  try {
    return run(command, args);
  } catch (const mw::Error& e) {
    std::cerr << "mwcheck: " << e.what() << "\n";
    return kInvalidConfig;
  } catch (const std::exception& e) {
    std::cerr << "mwcheck: " << e.what() << "\n";
    return kInvalidConfig;
  }
}
