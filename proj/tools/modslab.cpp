// SPDX-License-Identifier: Apache-2.0
//
// modslab <mode> --config <path> [--out <path>] [--format csv|json]
//         [--oracle-check] [--asymptotic] [--jobs N]

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "cli/worker_pool.hpp"

int main(int argc, char** argv) {
  using namespace modslab::cli;

  CLI::App app{"Scattering by a slab with a periodic y-modulation"};
  std::string mode_arg;
  std::string config_path;
  std::string out_path;
  std::string format_arg;
  CommandOptions opts;
  opts.jobs = default_jobs();

  app.add_option("mode", mode_arg, "amplitudes | sweep | figure1 | lasing | oracle-check")
      ->required();
  app.add_option("--config", config_path, "JSON run configuration")->required();
  app.add_option("--out", out_path, "output file (default: stdout)");
  app.add_option("--format", format_arg, "csv | json");
  app.add_flag("--oracle-check", opts.oracle_check, "add oracle columns and check them");
  app.add_flag("--asymptotic", opts.asymptotic, "figure1: add the near-threshold asymptotic");
  app.add_option("--jobs", opts.jobs, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  RunConfig cfg;
  try {
    cfg = load_config(config_path, parse_mode(mode_arg));
    if (!format_arg.empty()) cfg.format = parse_format(format_arg);
    if (!out_path.empty()) cfg.out_path = out_path;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }

  try {
    if (cfg.out_path.empty()) return run_command(cfg, opts, std::cout, std::cerr);
    std::ofstream file(cfg.out_path);
    if (!file) {
      std::cerr << "config error: cannot open '" << cfg.out_path << "' for writing\n";
      return kExitConfig;
    }
    return run_command(cfg, opts, file, std::cerr);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}
