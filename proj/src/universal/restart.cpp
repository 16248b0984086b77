#include "fom/universal/restart.hpp"

#include "fom/methods/gradient.hpp"
#include "fom/universal/universal_gradient.hpp"

#include <cmath>
#include <limits>

namespace fom {

Trace restart_strongly_convex(const StageSolver& stage, const RestartOptions& opt, const Point& x0) {
  if (!stage) throw ConfigError("restart wrapper needs a method with a certified gap bound");
  if (!(opt.mu > 0.0)) throw ConfigError("restart wrapper requires mu > 0");
  if (!(opt.epsilon > 0.0)) throw ConfigError("restart wrapper requires epsilon > 0");
  if (!(opt.R0 > 0.0)) throw ConfigError("restart wrapper requires R0 > 0");

  Trace t;
  std::vector<double> radii, gaps, stage_iters;
  Point x = x0;
  double R = opt.R0;
  long total = 0;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  t.push(x, nan, nan, nan, 0.0, 0, 0);
  radii.push_back(R);
  gaps.push_back(nan);
  stage_iters.push_back(0.0);
  for (int s = 0; s < opt.max_stages; ++s) {
    const double halving_target = opt.mu * R * R / 8.0;
    const bool final_stage = halving_target <= opt.epsilon;
    const double target = final_stage ? opt.epsilon : halving_target;
    StageResult r = stage(x, R, target);
    if (!std::isfinite(r.gap_bound)) throw ConfigError("wrapped method returned no gap certificate");
    if (r.gap_bound > target * (1.0 + 1e-12))
      throw AdaptivityError("stage certificate did not reach its target");
    require_same_dim(x0, r.x, "stage output");
    total += r.iterations;
    x = std::move(r.x);
    if (!final_stage) R *= 0.5;
    t.push(x, r.value, nan, nan, 0.0, static_cast<std::uint64_t>(total), 0);
    radii.push_back(R);
    gaps.push_back(r.gap_bound);
    stage_iters.push_back(static_cast<double>(r.iterations));
    if (final_stage) {
      t.converged = true;
      break;
    }
  }
  t.step_constants = radii;
  t.extras["radius"] = std::move(radii);
  t.extras["gap_bound"] = std::move(gaps);
  t.extras["stage_iterations"] = std::move(stage_iters);
  t.weights.assign(t.size(), 0.0);
  t.weights.back() = 1.0;
  t.finalize_average();
  return t;
}

long restart_total_iterations(const Trace& restart_trace) {
  return restart_trace.grad_calls.empty() ? 0 : static_cast<long>(restart_trace.grad_calls.back());
}

StageSolver subgradient_stage(const Problem& problem, double L0) {
  if (!(L0 > 0.0)) throw ConfigError("subgradient stage requires L0 > 0");
  return [problem, L0](const Point& center, double R, double target) {
    const double n_real = std::ceil(std::pow(L0 * R / target, 2.0));
    if (n_real > 1e9) throw ConfigError("subgradient stage would exceed 1e9 iterations");
    const int N = std::max(1, static_cast<int>(n_real));
    Trace tr = subgradient_descent(problem, center, R, L0, N);
    StageResult r;
    r.x = tr.averaged_point;
    r.gap_bound = L0 * R / std::sqrt(static_cast<double>(N));
    r.iterations = N;
    r.value = problem.oracle().value(r.x);
    return r;
  };
}

StageSolver gradient_stage(const Problem& problem, double L) {
  if (!(L > 0.0)) throw ConfigError("gradient stage requires L > 0");
  return [problem, L](const Point& center, double R, double target) {
    const double n_real = std::ceil(L * R * R / (2.0 * target));
    if (n_real > 1e9) throw ConfigError("gradient stage would exceed 1e9 iterations");
    const int N = std::max(1, static_cast<int>(n_real));
    Trace tr = gradient_descent(problem, center, StepRule::fixed_inverse_L(L), N);
    StageResult r;
    r.x = tr.last();
    r.gap_bound = L * R * R / (2.0 * N);
    r.iterations = N;
    r.value = tr.last_value();
    return r;
  };
}

StageSolver universal_stage(ModelPtr oracle, double L0_guess) {
  if (!oracle) throw ConfigError("universal stage requires an oracle");
  return [oracle, L0_guess](const Point& center, double R, double target) {
    UniversalOptions opt;
    opt.epsilon = target;
    opt.L0 = L0_guess;
    opt.R = R;
    const Geometry geometry(ProxSetup::euclidean(FeasibleSet::free_space(center.size())));
    Trace tr = universal_gradient(*oracle, geometry, center, opt);
    if (!tr.converged) throw AdaptivityError("universal stage hit its iteration cap");
    StageResult r;
    r.x = tr.averaged_point;
    r.gap_bound = tr.certificates.back();
    r.iterations = tr.iterations();
    r.value = oracle->value(r.x);
    return r;
  };
}

MuSearchResult restart_mu_search(const StageSolver& stage, RestartOptions options, const Point& x0,
                                 const std::function<bool(const Trace&)>& accept, int max_halvings) {
  if (!accept) throw ConfigError("mu search needs an acceptance test");
  MuSearchResult out;
  for (int a = 0; a <= max_halvings; ++a) {
    out.attempts = a + 1;
    out.mu = options.mu;
    out.trace = restart_strongly_convex(stage, options, x0);
    if (accept(out.trace)) return out;
    options.mu *= 0.5;
  }
  throw AdaptivityError("mu search did not produce an acceptable run");
}

}  // namespace fom
