#pragma once

#include "fom/core/problem.hpp"
#include "fom/core/trace.hpp"
#include "fom/model/model_oracle.hpp"

#include <functional>

namespace fom {

struct StageResult {
  Point x;
  double gap_bound = 0.0;  // certified bound on f(x) - f*
  long iterations = 0;
  double value = 0.0;
};

// Runs a convex method from `center`, given ||center - x*|| <= R, until its
// certified gap bound is at most `target_gap`.
using StageSolver = std::function<StageResult(const Point& center, double R, double target_gap)>;

struct RestartOptions {
  double mu = 0.0;
  double epsilon = 1e-3;
  double R0 = 1.0;  // bound on ||x0 - x*||
  int max_stages = 64;
};

// Stage k targets mu R_k^2 / 8 so that mu/2 ||x_k - x*||^2 <= gap gives
// R_{k+1} = R_k / 2; once that target drops below epsilon a final stage
// targets epsilon. Iterates are the stage outputs; extras hold "radius",
// "gap_bound" and "stage_iterations".
Trace restart_strongly_convex(const StageSolver& stage, const RestartOptions& options, const Point& x0);

long restart_total_iterations(const Trace& restart_trace);

// Subgradient stages: N = ceil((L0 R / target)^2), step R/(L0 sqrt N), bound L0 R / sqrt N.
StageSolver subgradient_stage(const Problem& problem, double L0);
// Gradient descent stages with step 1/L: N = ceil(L R^2 / (2 target)), bound L R^2 / (2N).
StageSolver gradient_stage(const Problem& problem, double L);
// Universal gradient stages (Euclidean, free space) certified over B_{2R}(center).
StageSolver universal_stage(ModelPtr oracle, double L0_guess = 1.0);

struct MuSearchResult {
  Trace trace;
  double mu = 0.0;
  int attempts = 0;
};

// Runs the restart scheme with mu, mu/2, ... until `accept` approves the run.
MuSearchResult restart_mu_search(const StageSolver& stage, RestartOptions options, const Point& x0,
                                 const std::function<bool(const Trace&)>& accept, int max_halvings = 30);

}  // namespace fom
