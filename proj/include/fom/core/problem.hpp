#pragma once

#include "fom/core/feasible_set.hpp"
#include "fom/core/oracle.hpp"

#include <optional>

namespace fom {

struct KnownOptimum {
  Point x;
  double f = 0.0;
};

struct ProblemConstants {
  std::optional<double> L1;  // Lipschitz constant of the gradient
  std::optional<double> L0;  // bound on subgradient norms
  std::optional<double> mu;  // strong convexity modulus
  std::optional<double> R;   // bound on ||x0 - x*||
};

class Problem {
 public:
  Problem(OraclePtr oracle, FeasibleSet set, std::optional<KnownOptimum> optimum = std::nullopt,
          ProblemConstants constants = {});

  const FirstOrderOracle& oracle() const { return *oracle_; }
  const OraclePtr& oracle_ptr() const { return oracle_; }
  const FeasibleSet& set() const { return set_; }
  const std::optional<KnownOptimum>& optimum() const { return optimum_; }
  const ProblemConstants& constants() const { return constants_; }
  Index dim() const { return oracle_->dim(); }

  Problem with_constants(ProblemConstants c) const;

 private:
  OraclePtr oracle_;
  FeasibleSet set_;
  std::optional<KnownOptimum> optimum_;
  ProblemConstants constants_;
};

}  // namespace fom
