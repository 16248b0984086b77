// fombench: run, compare and verify first-order methods on the test zoo.
#include "fom/bench/config.hpp"
#include "fom/bench/runner.hpp"
#include "fom/bench/suite.hpp"
#include "fom/core/types.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  using namespace fom::bench;
  CLI::App app{"fombench: first-order method benchmark harness"};
  app.require_subcommand(1);

  std::string out_dir = ".";
  long long seed = -1;
  bool no_plot = false;
  app.add_option("--out", out_dir, "directory for CSV and SVG outputs");
  app.add_option("--seed", seed, "seed overriding the config's problem seed")->check(CLI::NonNegativeNumber);
  app.add_flag("--no-plot", no_plot, "skip SVG output");

  std::string config_path;
  auto* run = app.add_subcommand("run", "run one method from a config file");
  run->add_option("config", config_path, "JSON run config")->required();
  auto* compare = app.add_subcommand("compare", "run a method list on one problem");
  compare->add_option("config", config_path, "JSON run config")->required();
  auto* verify = app.add_subcommand("verify-suite", "run every acceptance criterion");
  double l_scale = 1.0;
  verify->add_option("--declared-L-scale", l_scale, "scale the declared L of the descent check (fault injection)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitConfig;
  }

  CliOptions options;
  options.out_dir = out_dir;
  options.plot = !no_plot;
  if (seed >= 0) options.seed = static_cast<std::uint64_t>(seed);
  if (const char* env = std::getenv("FOM_THREADS")) {
    try {
      options.threads = std::max(1, std::stoi(env));
    } catch (const std::exception&) {
      std::cerr << "error: FOM_THREADS must be an integer\n";
      return kExitConfig;
    }
  }

  try {
    if (*verify) {
      SuiteOptions so;
      so.declared_L_scale = l_scale;
      const auto results = run_suite(so);
      print_report(results, std::cout);
      return all_passed(results) ? kExitOk : kExitBound;
    }
    const RunConfig config = load_config(config_path);
    if (*run) return run_command(config, options, std::cout);
    return compare_command(config, options, std::cout);
  } catch (const fom::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const fom::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const fom::DimensionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const fom::DivergenceError& e) {
    std::cerr << "diverged: " << e.what() << '\n';
    return kExitDivergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDivergence;
  }
}
