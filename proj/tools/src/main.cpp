#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "commands.hpp"
#include "config.hpp"
#include "fracburgers/errors.hpp"
#include "fracburgers/log.hpp"

using namespace fracburgers;
using namespace fracburgers::cli;

int main(int argc, char** argv) {
  CLI::App app{"Pseudospectral fractal Burgers solver and verification harness"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir = "out";
  std::optional<std::uint64_t> seed;
  std::size_t threads = 1;
  bool verbose = false;
  app.add_option("--config", config_path, "INI configuration file")->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "Output directory");
  app.add_option("--seed", seed, "Seed of the randomized corpus");
  app.add_option("--threads", threads, "Worker threads for parameter sweeps")
      ->check(CLI::Range(1, 256));
  app.add_flag("-v,--verbose", verbose, "Log progress");

  app.fallthrough();
  auto* simulate = app.add_subcommand("simulate", "Evolve a datum, write trajectory and diagnostics");
  auto* kernel = app.add_subcommand("kernel", "Tabulate the stable profile and its tail bounds");
  auto* verify = app.add_subcommand("verify", "Run the inequality suite and solver invariants");
  auto* rate = app.add_subcommand("rate", "Measure the rarefaction convergence rate");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitValidation;
  }
  set_log_level(verbose ? LogLevel::kInfo : LogLevel::kWarning);

  std::string command;
  if (simulate->parsed()) command = "simulate";
  if (kernel->parsed()) command = "kernel";
  if (verify->parsed()) command = "verify";
  if (rate->parsed()) command = "rate";

  try {
    Context ctx;
    ctx.config = load_config(config_path.empty() ? std::nullopt
                                                 : std::optional<std::filesystem::path>(config_path));
    if (seed) ctx.config.verify.seed = *seed;
    ctx.out_dir = out_dir;
    ctx.threads = threads;
    validate(ctx.config, command);

    if (command == "simulate") return cmd_simulate(ctx);
    if (command == "kernel") return cmd_kernel(ctx);
    if (command == "verify") return cmd_verify(ctx);
    return cmd_rate(ctx);
  } catch (const ValidationError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kExitValidation;
  } catch (const NumericalError& e) {
    fmt::print(stderr, "numerical failure: {}\n", e.what());
    return kExitNumerical;
  } catch (const std::exception& e) {
    fmt::print(stderr, "numerical failure: {}\n", e.what());
    return kExitNumerical;
  }
}
