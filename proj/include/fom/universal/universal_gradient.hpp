#pragma once

#include "fom/core/trace.hpp"
#include "fom/model/model_oracle.hpp"
#include "fom/prox/geometry.hpp"

#include <optional>

namespace fom {

struct UniversalOptions {
  double epsilon = 1e-3;
  double L0 = 1.0;
  int budget = 64;  // inner trials allowed per outer iteration
  int max_iterations = 1000000;
  // Certificate ball B_{2R}(x0). Without R the feasible set is used when it is
  // bounded; otherwise the run stops only at max_iterations.
  std::optional<double> R;
};

// Halve L, then double it until
//   f(x+) <= f_delta(x) + psi(x+, x) + L V(x+, x) + eps/2.
// Weights 1/L^k on x^1..x^N. trace.certificates holds the weighted gap
// certificate; trace.extras["inner_trials"] the trials per iteration.
Trace universal_gradient(const ModelOracle& oracle, const Geometry& geometry, const Point& x0,
                         const UniversalOptions& options);

// Count (2 L_nu R^{1+nu} / eps)^{2/(1+nu)}.
double universal_iteration_bound(double L_nu, double nu, double R, double epsilon);

}  // namespace fom
