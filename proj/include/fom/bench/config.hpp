#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fom::bench {

inline constexpr int kSchemaVersion = 1;

struct ProblemSpec {
  std::string family;
  std::map<std::string, double> params;
  std::optional<std::uint64_t> seed;
};

struct MethodSpec {
  std::string name;
  std::map<std::string, double> params;
  std::map<std::string, std::string> options;  // non-numeric settings (variants)

  double get(const std::string& key, double fallback) const;
  std::string option(const std::string& key, const std::string& fallback) const;
};

struct Budget {
  int iterations = 100;
  std::optional<std::uint64_t> oracle_calls;  // truncates the trace at this many gradient calls
  std::optional<double> wall_seconds;
};

struct Outputs {
  std::string trace = "trace.csv";
  std::optional<std::string> plot;
};

struct RunConfig {
  int schema = kSchemaVersion;
  ProblemSpec problem;
  std::vector<MethodSpec> methods;  // "method" for run, "methods" for compare
  Budget budget;
  Outputs outputs;
  std::vector<std::string> verify;
};

// Throws ConfigError naming the offending field.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

std::vector<std::string> known_methods();
std::vector<std::string> known_checks();

}  // namespace fom::bench
