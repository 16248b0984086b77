#include "fom/methods/momentum.hpp"

#include <cmath>
#include <functional>
#include <limits>

namespace fom {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_unconstrained(const Problem& problem, const Point& x0, int N, const char* method) {
  if (problem.set().kind() != FeasibleSet::Kind::FreeSpace)
    throw ConfigError(std::string(method) + " is implemented for unconstrained problems only");
  if (N < 0) throw ConfigError("iteration count must be nonnegative");
  require_dim(x0, problem.dim(), method);
  if (!all_finite(x0)) throw DomainError("start point is not finite");
}

Evaluation checked_eval(const FirstOrderOracle& o, const Point& x, int k) {
  Evaluation e = o.eval(x);
  if (!std::isfinite(e.value) || !all_finite(e.subgradient))
    throw DivergenceError(k, "non-finite oracle output");
  return e;
}

class Recorder {
 public:
  explicit Recorder(const FirstOrderOracle& o)
      : o_(o), g_base_(o.grad_calls()), v_base_(o.value_calls()) {}

  // Records x with its value; the gradient norm is known only when the
  // method evaluated the gradient at x itself.
  void record(Trace& t, const Point& x, double grad_norm, double step_L, int k) {
    if (!all_finite(x)) throw DivergenceError(k, "iterate became non-finite");
    const double f = o_.value(x);
    if (!std::isfinite(f)) throw DivergenceError(k, "non-finite objective value");
    t.push(x, f, grad_norm, step_L, 0.0, o_.grad_calls() - g_base_, o_.value_calls() - v_base_);
  }

 private:
  const FirstOrderOracle& o_;
  std::uint64_t g_base_, v_base_;
};

Trace finish(Trace t) {
  t.set_uniform_weights(Averaging::FromOne);
  t.finalize_average();
  return t;
}

}  // namespace

Trace heavy_ball(const Problem& problem, const Point& x0, double alpha, double beta, int N) {
  require_unconstrained(problem, x0, N, "heavy ball");
  if (!(alpha > 0.0)) throw ConfigError("heavy ball requires alpha > 0");
  if (!(beta >= 0.0 && beta < 1.0)) throw ConfigError("heavy ball requires 0 <= beta < 1");
  const FirstOrderOracle& o = problem.oracle();
  const std::uint64_t g_base = o.grad_calls(), v_base = o.value_calls();
  Trace t;
  Point prev = x0, x = x0;
  for (int k = 0;; ++k) {
    Evaluation e = checked_eval(o, x, k);
    t.push(x, e.value, e.subgradient.norm(), k == 0 ? kNaN : 1.0 / alpha, 0.0, o.grad_calls() - g_base,
           o.value_calls() - v_base);
    if (k == N) break;
    Point next = x - alpha * e.subgradient + beta * (x - prev);
    if (!all_finite(next)) throw DivergenceError(k + 1, "iterate became non-finite");
    prev = std::move(x);
    x = std::move(next);
  }
  return finish(std::move(t));
}

Trace nesterov_momentum(const Problem& problem, const Point& x0, double L, std::optional<double> mu,
                        int N) {
  require_unconstrained(problem, x0, N, "nesterov momentum");
  if (!(L > 0.0)) throw ConfigError("nesterov momentum requires L > 0");
  if (mu && !(*mu > 0.0 && *mu <= L)) throw ConfigError("nesterov momentum requires 0 < mu <= L");
  const FirstOrderOracle& o = problem.oracle();
  Recorder rec(o);
  const double strong_beta = mu ? (std::sqrt(L) - std::sqrt(*mu)) / (std::sqrt(L) + std::sqrt(*mu)) : 0.0;
  Trace t;
  Point prev = x0, x = x0;
  rec.record(t, x, kNaN, kNaN, 0);
  for (int k = 0; k < N; ++k) {
    const double beta = mu ? strong_beta : (k - 1.0) / (k + 2.0);
    const Point y = x + beta * (x - prev);
    const Evaluation e = checked_eval(o, y, k);
    Point next = y - e.subgradient / L;
    prev = std::move(x);
    x = std::move(next);
    rec.record(t, x, kNaN, L, k + 1);
  }
  return finish(std::move(t));
}

namespace {

Trace coupling(const Problem& problem, const Point& x0, double L, int N,
               const std::function<double(int)>& step_h, const std::function<double(int)>& tau_of) {
  const FirstOrderOracle& o = problem.oracle();
  Recorder rec(o);
  Trace t;
  Point y = x0, z = x0;
  rec.record(t, y, kNaN, kNaN, 0);
  for (int k = 0; k < N; ++k) {
    const double tau = tau_of(k);
    const Point x = tau * z + (1.0 - tau) * y;
    const Evaluation e = checked_eval(o, x, k);
    y = x - e.subgradient / L;
    z -= step_h(k) * e.subgradient;
    rec.record(t, y, kNaN, L, k + 1);
  }
  return finish(std::move(t));
}

}  // namespace

Trace linear_coupling(const Problem& problem, const Point& x0, double L, double h, int N) {
  require_unconstrained(problem, x0, N, "linear coupling");
  if (!(L > 0.0) || !(h > 0.0)) throw ConfigError("linear coupling requires L > 0 and h > 0");
  const double tau = 1.0 / (L * h + 1.0);
  return coupling(problem, x0, L, N, [h](int) { return h; }, [tau](int) { return tau; });
}

Trace linear_coupling_schedule(const Problem& problem, const Point& x0, double L, int N) {
  require_unconstrained(problem, x0, N, "linear coupling");
  if (!(L > 0.0)) throw ConfigError("linear coupling requires L > 0");
  return coupling(
      problem, x0, L, N, [L](int k) { return (k + 2.0) / (2.0 * L); },
      [](int k) { return 2.0 / (k + 2.0); });
}

}  // namespace fom
