// Command-line front end: `run` evaluates the scenario blocks of a
// configuration, `compare-fluid` evaluates its fluid grid.
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dirsinr/runner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;

struct CommonArgs {
  std::string config;
  std::string out;
  std::optional<std::uint64_t> seed_override;
  unsigned threads = 1;
};

void add_common(CLI::App& cmd, CommonArgs& args) {
  cmd.add_option("config", args.config, "YAML or JSON configuration file")->required();
  cmd.add_option("--out", args.out, "Output directory (overrides output_dir)");
  cmd.add_option("--seed-override", args.seed_override, "Replace every scenario seed");
  cmd.add_option("--threads", args.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
}

int execute(const CommonArgs& args, bool fluid) {
  try {
    const dirsinr::RunManifest manifest = dirsinr::load_manifest(args.config);
    dirsinr::RunOptions options;
    if (!args.out.empty()) options.output_dir = args.out;
    options.seed_override = args.seed_override;
    options.threads = args.threads;
    const auto artifacts =
        fluid ? dirsinr::run_fluid_comparison(manifest, options) : dirsinr::run_manifest(manifest, options);
    for (const auto& [name, sha] : artifacts) std::cout << sha << "  " << name << '\n';
    return kExitOk;
  } catch (const dirsinr::ConfigError& e) {
    std::cerr << "config error: " << args.config << ":" << e.what() << '\n';
    return kExitConfig;
  } catch (const dirsinr::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directional-receiver SINR simulator for hexagonal networks"};
  app.require_subcommand(1);

  CommonArgs run_args;
  CommonArgs fluid_args;
  auto* run = app.add_subcommand("run", "Monte Carlo scenarios: CDF, quantile and delta tables");
  add_common(*run, run_args);
  auto* compare = app.add_subcommand("compare-fluid", "Fluid model against Monte Carlo on a probe grid");
  add_common(*compare, fluid_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  if (run->parsed()) return execute(run_args, false);
  return execute(fluid_args, true);
}
