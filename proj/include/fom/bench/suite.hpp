#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fom::bench {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double measured = 0.0;
  double predicted = 0.0;
  std::string tolerance;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  // Multiplies the declared smoothness constant used by the descent
  // certificate criterion; 0.5 is the fault-injection setting.
  double declared_L_scale = 1.0;
  std::vector<int> only;  // empty: all criteria
};

std::vector<CriterionResult> run_suite(const SuiteOptions& options = {});
CriterionResult run_criterion(int id, const SuiteOptions& options = {});
inline constexpr int kCriterionCount = 15;

// One line per criterion followed by a summary line.
void print_report(const std::vector<CriterionResult>& results, std::ostream& out);
bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace fom::bench
