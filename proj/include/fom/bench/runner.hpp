#pragma once

#include "fom/bench/config.hpp"
#include "fom/bench/output.hpp"
#include "fom/zoo/zoo.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fom::bench {

struct BoundCheck {
  std::string name;
  bool pass = false;
  double measured = 0.0;
  double predicted = 0.0;
  std::string detail;
};

// One of: a zoo problem, a matrix game or a constrained program.
struct Instance {
  std::string family;
  std::optional<ZooProblem> zoo;
  std::optional<MatrixGame> game;
  std::optional<ConstrainedProgram> program;

  std::optional<double> f_star() const;
};

Instance make_instance(const ProblemSpec& spec, std::optional<std::uint64_t> seed_override = std::nullopt);

struct RunResult {
  std::string method;
  Trace trace;
  std::vector<CsvRow> rows;
  std::vector<BoundCheck> checks;
  bool diverged = false;
  std::string message;
  double seconds = 0.0;
};

// Runs one method. Divergence is reported in the result; configuration
// problems throw ConfigError.
RunResult execute(const Instance& instance, const MethodSpec& method, const Budget& budget,
                  const std::vector<std::string>& checks);

struct CliOptions {
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  bool plot = true;
  int threads = 1;
};

enum ExitCode { kExitOk = 0, kExitConfig = 1, kExitBound = 2, kExitDivergence = 3 };

int run_command(const RunConfig& config, const CliOptions& options, std::ostream& log);
int compare_command(const RunConfig& config, const CliOptions& options, std::ostream& log);

}  // namespace fom::bench
