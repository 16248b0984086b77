#include "fom/bench/config.hpp"

#include "fom/core/types.hpp"
#include "fom/zoo/zoo.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace fom::bench {

using nlohmann::json;

double MethodSpec::get(const std::string& key, double fallback) const {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

std::string MethodSpec::option(const std::string& key, const std::string& fallback) const {
  auto it = options.find(key);
  return it == options.end() ? fallback : it->second;
}

std::vector<std::string> known_methods() {
  return {"gradient_descent", "subgradient_descent",  "heavy_ball",       "nesterov_momentum",
          "linear_coupling",  "cg_quadratic",         "nonlinear_cg",     "similar_triangles",
          "universal_gradient", "restart_subgradient", "mirror_prox",     "universal_mirror_prox",
          "dual_solve_restore"};
}

std::vector<std::string> known_checks() {
  return {"descent", "model-rate", "linear-rate", "universal-count", "restart-count", "lower-bound", "restoration-budget",
          "saddle-gap"};
}

namespace {

std::vector<std::string> program_families() {
  return {"matrix_game", "random_entropy_program", "consensus_path"};
}

[[noreturn]] void fail(const std::string& field, const std::string& why) {
  throw ConfigError("config field '" + field + "': " + why);
}

const json& require(const json& j, const std::string& key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) fail(path + key, "missing");
  return j.at(key);
}

std::map<std::string, double> numeric_map(const json& j, const std::string& path) {
  std::map<std::string, double> out;
  if (j.is_null()) return out;
  if (!j.is_object()) fail(path, "expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!it.value().is_number()) fail(path + "." + it.key(), "expected a number");
    out[it.key()] = it.value().get<double>();
  }
  return out;
}

MethodSpec parse_method(const json& j, const std::string& path) {
  MethodSpec m;
  const json& name = require(j, "name", path + ".");
  if (!name.is_string()) fail(path + ".name", "expected a string");
  m.name = name.get<std::string>();
  const auto known = known_methods();
  if (std::find(known.begin(), known.end(), m.name) == known.end())
    fail(path + ".name", "unknown method '" + m.name + "'");
  if (j.contains("params")) {
    const json& p = j.at("params");
    if (!p.is_object()) fail(path + ".params", "expected an object");
    for (auto it = p.begin(); it != p.end(); ++it) {
      if (it.value().is_number())
        m.params[it.key()] = it.value().get<double>();
      else if (it.value().is_string())
        m.options[it.key()] = it.value().get<std::string>();
      else if (it.value().is_boolean())
        m.params[it.key()] = it.value().get<bool>() ? 1.0 : 0.0;
      else
        fail(path + ".params." + it.key(), "expected a number, string or boolean");
    }
  }
  return m;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config root must be an object");

  RunConfig c;
  const json& schema = require(j, "schema", "");
  if (!schema.is_number_integer()) fail("schema", "expected an integer");
  c.schema = schema.get<int>();
  if (c.schema != kSchemaVersion) fail("schema", "unsupported version " + std::to_string(c.schema));

  const json& prob = require(j, "problem", "");
  const json& fam = require(prob, "family", "problem.");
  if (!fam.is_string()) fail("problem.family", "expected a string");
  c.problem.family = fam.get<std::string>();
  auto families = zoo_families();
  for (const auto& f : program_families()) families.push_back(f);
  if (std::find(families.begin(), families.end(), c.problem.family) == families.end())
    fail("problem.family", "unknown family '" + c.problem.family + "'");
  if (prob.contains("params")) c.problem.params = numeric_map(prob.at("params"), "problem.params");
  if (prob.contains("seed")) {
    const json& s = prob.at("seed");
    if (!s.is_number_integer() || s.get<long long>() < 0) fail("problem.seed", "expected a non-negative integer");
    c.problem.seed = s.get<std::uint64_t>();
  }

  if (j.contains("method") && j.contains("methods")) fail("methods", "give either 'method' or 'methods'");
  if (j.contains("method")) {
    c.methods.push_back(parse_method(j.at("method"), "method"));
  } else if (j.contains("methods")) {
    const json& ms = j.at("methods");
    if (!ms.is_array()) fail("methods", "expected an array");
    for (std::size_t i = 0; i < ms.size(); ++i)
      c.methods.push_back(parse_method(ms[i], "methods[" + std::to_string(i) + "]"));
  } else {
    fail("method", "missing");
  }
  if (c.methods.empty()) fail("methods", "method list is empty");

  const json& budget = require(j, "budget", "");
  const json& iters = require(budget, "iterations", "budget.");
  if (!iters.is_number_integer() || iters.get<long long>() <= 0)
    fail("budget.iterations", "expected a positive integer");
  c.budget.iterations = iters.get<int>();
  if (budget.contains("oracle_calls")) {
    const json& oc = budget.at("oracle_calls");
    if (!oc.is_number_integer() || oc.get<long long>() <= 0) fail("budget.oracle_calls", "expected a positive integer");
    c.budget.oracle_calls = oc.get<std::uint64_t>();
  }
  if (budget.contains("wall_seconds")) {
    const json& ws = budget.at("wall_seconds");
    if (!ws.is_number() || !(ws.get<double>() > 0.0)) fail("budget.wall_seconds", "expected a positive number");
    c.budget.wall_seconds = ws.get<double>();
  }

  if (j.contains("outputs")) {
    const json& o = j.at("outputs");
    if (!o.is_object()) fail("outputs", "expected an object");
    if (o.contains("trace")) {
      if (!o.at("trace").is_string()) fail("outputs.trace", "expected a string");
      c.outputs.trace = o.at("trace").get<std::string>();
    }
    if (o.contains("plot")) {
      if (!o.at("plot").is_string()) fail("outputs.plot", "expected a string");
      c.outputs.plot = o.at("plot").get<std::string>();
    }
  }

  if (j.contains("verify")) {
    const json& v = j.at("verify");
    if (!v.is_array()) fail("verify", "expected an array of check names");
    const auto checks = known_checks();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const std::string path = "verify[" + std::to_string(i) + "]";
      if (!v[i].is_string()) fail(path, "expected a string");
      const std::string name = v[i].get<std::string>();
      if (std::find(checks.begin(), checks.end(), name) == checks.end()) fail(path, "unknown check '" + name + "'");
      c.verify.push_back(name);
    }
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace fom::bench
