#include "fom/methods/gradient.hpp"

#include <cmath>
#include <limits>

namespace fom {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_iterations(int N) {
  if (N < 0) throw ConfigError("iteration count must be nonnegative");
}

void check_finite(int k, double f, const Point& g) {
  if (!std::isfinite(f) || !all_finite(g)) throw DivergenceError(k, "non-finite oracle output");
}

}  // namespace

StepRule StepRule::fixed_inverse_L(double L) {
  if (!(L > 0.0) || !std::isfinite(L)) throw ConfigError("step rule requires L > 0");
  StepRule r;
  r.kind_ = Kind::FixedInverseL;
  r.L_ = L;
  return r;
}

StepRule StepRule::sequence(std::function<double(int)> h) {
  if (!h) throw ConfigError("step sequence is empty");
  StepRule r;
  r.kind_ = Kind::Sequence;
  r.seq_ = std::move(h);
  return r;
}

StepRule StepRule::sequence(std::vector<double> h) {
  return sequence([h = std::move(h)](int k) {
    if (k < 0 || static_cast<std::size_t>(k) >= h.size()) throw ConfigError("step sequence too short");
    return h[static_cast<std::size_t>(k)];
  });
}

StepRule StepRule::constant(double h) {
  if (!(h > 0.0)) throw ConfigError("step sizes must be positive");
  return sequence([h](int) { return h; });
}

StepRule StepRule::exact_quadratic(Matrix A) {
  if (A.rows() != A.cols() || A.rows() == 0) throw DimensionError("line search matrix must be square");
  StepRule r;
  r.kind_ = Kind::ExactQuadraticLineSearch;
  r.A_ = std::move(A);
  return r;
}

double StepRule::size(int k, const Point& g) const {
  switch (kind_) {
    case Kind::FixedInverseL:
      return 1.0 / L_;
    case Kind::Sequence: {
      const double h = seq_(k);
      if (!(h > 0.0)) throw ConfigError("step sizes must be positive");
      return h;
    }
    case Kind::ExactQuadraticLineSearch: {
      require_dim(g, A_.rows(), "line search gradient");
      const double gg = g.squaredNorm();
      if (gg == 0.0) return 1.0;  // stationary; any step leaves x unchanged
      const double curv = g.dot(A_ * g);
      if (!(curv > 0.0)) throw NumericalError("line search found non-positive curvature");
      return gg / curv;
    }
  }
  return 1.0;
}

Trace gradient_descent(const Problem& problem, const Point& x0, const StepRule& step, int N,
                       Averaging averaging) {
  require_iterations(N);
  require_dim(x0, problem.dim(), "gradient descent start");
  if (!all_finite(x0)) throw DomainError("start point is not finite");
  if (!problem.set().contains(x0, 1e-9)) throw DomainError("start point lies outside the feasible set");

  const FirstOrderOracle& oracle = problem.oracle();
  const std::uint64_t g_base = oracle.grad_calls(), v_base = oracle.value_calls();
  Trace t;
  Point x = x0;
  double step_L = kNaN;
  for (int k = 0;; ++k) {
    Evaluation e = oracle.eval(x);
    check_finite(k, e.value, e.subgradient);
    t.push(x, e.value, e.subgradient.norm(), step_L, 0.0, oracle.grad_calls() - g_base,
           oracle.value_calls() - v_base);
    if (k == N) {
      t.subgradients.push_back(std::move(e.subgradient));
      break;
    }
    const double h = step.size(k, e.subgradient);
    x = problem.set().project(x - h * e.subgradient);
    t.subgradients.push_back(std::move(e.subgradient));
    if (!all_finite(x)) throw DivergenceError(k + 1, "iterate became non-finite");
    step_L = 1.0 / h;
  }
  t.set_uniform_weights(averaging);
  t.finalize_average();
  return t;
}

Trace subgradient_descent(const Problem& problem, const Point& x0, double R, double L0, int N) {
  if (!(R > 0.0) || !(L0 > 0.0)) throw ConfigError("subgradient step requires R > 0 and L0 > 0");
  if (N < 1) throw ConfigError("subgradient descent needs at least one step");
  const double h = R / (L0 * std::sqrt(static_cast<double>(N)));
  return gradient_descent(problem, x0, StepRule::constant(h), N, Averaging::FromZero);
}

Trace model_gradient_method(const ModelOracle& oracle, const Geometry& geometry, double L,
                            const Point& x0, int N) {
  require_iterations(N);
  if (!(L > 0.0)) throw ConfigError("model gradient method requires L > 0");
  require_dim(x0, geometry.dim(), "model gradient start");
  require_dim(x0, oracle.dim(), "model gradient start");
  if (!geometry.compatible(oracle.composite()))
    throw ConfigError("composite term has no exact step for this prox setup");
  if (!geometry.contains(x0)) throw DomainError("start point lies outside the feasible set");

  const std::uint64_t g_base = oracle.grad_calls(), v_base = oracle.value_calls();
  Trace t;
  Point x = x0;
  for (int k = 0;; ++k) {
    Model m = oracle.query(x);
    const double f = oracle.value(x);
    check_finite(k, f, m.linear);
    t.push(x, f, geometry.dual_norm(m.linear), k == 0 ? kNaN : L, 0.0, oracle.grad_calls() - g_base,
           oracle.value_calls() - v_base);
    if (k == N) {
      t.subgradients.push_back(std::move(m.linear));
      break;
    }
    x = geometry.step(x, m.linear, 1.0 / L, m.composite);
    t.subgradients.push_back(std::move(m.linear));
    if (!all_finite(x)) throw DivergenceError(k + 1, "iterate became non-finite");
  }
  t.set_uniform_weights(Averaging::FromOne);
  t.finalize_average();
  return t;
}

}  // namespace fom
