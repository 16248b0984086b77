#include "fom/bench/config.hpp"
#include "fom/bench/output.hpp"
#include "fom/bench/runner.hpp"
#include "fom/bench/suite.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

using namespace fom;
using namespace fom::bench;

namespace {

const char* kGd = R"({
  "schema": 1,
  "problem": {"family": "random_quadratic", "params": {"n": 6, "mu": 1, "L": 50}, "seed": 3},
  "method": {"name": "gradient_descent"},
  "budget": {"iterations": 40},
  "verify": ["descent", "linear-rate"]
})";

std::string csv_of(const RunConfig& cfg) {
  Instance in = make_instance(cfg.problem);
  RunResult r = execute(in, cfg.methods.front(), cfg.budget, cfg.verify);
  std::ostringstream os;
  write_csv(os, r.rows, false);
  return os.str();
}

}  // namespace

TEST(Config, ParsesRunConfig) {
  RunConfig c = parse_config(kGd);
  EXPECT_EQ(c.problem.family, "random_quadratic");
  EXPECT_EQ(*c.problem.seed, 3u);
  ASSERT_EQ(c.methods.size(), 1u);
  EXPECT_EQ(c.methods[0].name, "gradient_descent");
  EXPECT_EQ(c.budget.iterations, 40);
  EXPECT_EQ(c.outputs.trace, "trace.csv");
  EXPECT_EQ(c.verify.size(), 2u);
}

TEST(Config, ErrorsNameTheField) {
  auto message = [](const std::string& text) {
    try {
      parse_config(text);
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message("{").find("JSON"), std::string::npos);
  EXPECT_NE(message(R"({"schema": 2, "problem": {"family": "huber"}, "method": {"name": "gradient_descent"}})")
                .find("schema"),
            std::string::npos);
  EXPECT_NE(message(R"({"schema": 1, "method": {"name": "gradient_descent"}})").find("problem"), std::string::npos);
  EXPECT_NE(message(R"({"schema": 1, "problem": {"family": "huber"}, "method": {"name": "newton"}})")
                .find("method.name"),
            std::string::npos);
  EXPECT_NE(message(R"({"schema": 1, "problem": {"family": "huber"}, "methods": []})").find("methods"),
            std::string::npos);
  EXPECT_NE(message(R"({"schema": 1, "problem": {"family": "huber"}, "method": {"name": "gradient_descent"},
                        "budget": {"iterations": 5}, "verify": ["nope"]})")
                .find("verify"),
            std::string::npos);
  EXPECT_NE(message(R"({"schema": 1, "problem": {"family": "huber", "params": {"L": "x"}},
                        "method": {"name": "gradient_descent"}})")
                .find("problem.params.L"),
            std::string::npos);
}

TEST(Config, MissingFileIsConfigError) {
  EXPECT_THROW(load_config("/nonexistent/run.json"), ConfigError);
}

TEST(Output, NumberFormat) {
  EXPECT_EQ(format_number(1.0), "1.000000000000000e+00");
  EXPECT_EQ(format_number(std::numeric_limits<double>::quiet_NaN()), "");
}

TEST(Output, CsvRoundTrip) {
  std::vector<CsvRow> rows(2);
  rows[0].iter = 0;
  rows[0].f_value = 2.5;
  rows[0].certificate = std::numeric_limits<double>::quiet_NaN();
  rows[1].iter = 1;
  rows[1].f_value = 0.125;
  rows[1].grad_calls = 7;
  std::ostringstream os;
  write_csv(os, rows, true);
  EXPECT_NE(os.str().find("\r\n"), std::string::npos);
  std::istringstream is(os.str());
  CsvTable t = read_csv(is);
  ASSERT_EQ(t.rows.size(), 2u);
  EXPECT_EQ(t.header.front(), "method");
  int f = t.column("f_value");
  ASSERT_GE(f, 0);
  EXPECT_DOUBLE_EQ(std::stod(t.rows[1][f]), 0.125);
  EXPECT_EQ(t.rows[0][t.column("certificate")], "");
  EXPECT_EQ(t.rows[1][t.column("grad_calls")], "7");
  EXPECT_EQ(t.column("absent"), -1);

  std::string svg = svg_plot(t, 0.0, "test");
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

TEST(Runner, DeterministicCsvAndPassingChecks) {
  RunConfig c = parse_config(kGd);
  EXPECT_EQ(csv_of(c), csv_of(c));
  Instance in = make_instance(c.problem);
  RunResult r = execute(in, c.methods.front(), c.budget, c.verify);
  EXPECT_FALSE(r.diverged);
  ASSERT_EQ(r.checks.size(), 2u);
  for (const auto& chk : r.checks) EXPECT_TRUE(chk.pass) << chk.name << ": " << chk.detail;
  EXPECT_EQ(r.rows.size(), 41u);
}

TEST(Runner, UnderstatedLFailsDescent) {
  RunConfig c = parse_config(kGd);
  c.methods[0].params["L"] = 25.0;
  Instance in = make_instance(c.problem);
  RunResult r = execute(in, c.methods.front(), c.budget, {"descent"});
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_FALSE(r.checks[0].pass);
}

TEST(Runner, DivergenceIsReported) {
  RunConfig c = parse_config(kGd);
  c.methods[0].params["L"] = 1.0;
  c.budget.iterations = 5000;
  Instance in = make_instance(c.problem);
  RunResult r = execute(in, c.methods.front(), c.budget, {});
  EXPECT_TRUE(r.diverged);
}

TEST(Runner, SeedOverrideChangesInstance) {
  RunConfig c = parse_config(kGd);
  Instance a = make_instance(c.problem);
  Instance b = make_instance(c.problem, 99);
  EXPECT_NE(*a.zoo->hessian, *b.zoo->hessian);
}

TEST(Runner, OracleBudgetTruncates) {
  RunConfig c = parse_config(kGd);
  c.budget.oracle_calls = 10;
  Instance in = make_instance(c.problem);
  RunResult r = execute(in, c.methods.front(), c.budget, {});
  ASSERT_FALSE(r.rows.empty());
  EXPECT_LE(r.rows.back().grad_calls, 10u);
}

TEST(Suite, CriterionIsIdempotent) {
  SuiteOptions o;
  CriterionResult a = run_criterion(1, o);
  CriterionResult b = run_criterion(1, o);
  EXPECT_TRUE(a.pass);
  EXPECT_EQ(a.measured, b.measured);
  EXPECT_EQ(a.detail, b.detail);
}

TEST(Suite, TamperedConstantFailsDescentCriterion) {
  SuiteOptions o;
  o.declared_L_scale = 0.5;
  EXPECT_FALSE(run_criterion(3, o).pass);
  o.declared_L_scale = 1.0;
  EXPECT_TRUE(run_criterion(3, o).pass);
}

TEST(Suite, ReportHasOneLinePerCriterion) {
  SuiteOptions o;
  o.only = {6, 14};
  auto res = run_suite(o);
  ASSERT_EQ(res.size(), 2u);
  std::ostringstream os;
  print_report(res, os);
  std::string s = os.str();
  EXPECT_EQ(std::count(s.begin(), s.end(), '\n'), 3);
  EXPECT_TRUE(all_passed(res));
  EXPECT_THROW(run_criterion(99), ConfigError);
}
