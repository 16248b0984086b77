#include "fom/core/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace fom {

FirstOrderOracle::FirstOrderOracle(Index dim) : dim_(dim) {
  if (dim <= 0) throw DimensionError("oracle dimension must be positive");
}

Evaluation FirstOrderOracle::eval(const Point& x) const {
  require_dim(x, dim_, "oracle eval");
  grad_calls_.fetch_add(1, std::memory_order_relaxed);
  Evaluation e = do_eval(x);
  require_dim(e.subgradient, dim_, "oracle subgradient");
  return e;
}

double FirstOrderOracle::value(const Point& x) const {
  require_dim(x, dim_, "oracle value");
  value_calls_.fetch_add(1, std::memory_order_relaxed);
  return do_value(x);
}

void FirstOrderOracle::reset_counters() const {
  grad_calls_.store(0, std::memory_order_relaxed);
  value_calls_.store(0, std::memory_order_relaxed);
}

FunctionOracle::FunctionOracle(Index dim, ValueFn f, GradFn grad)
    : FirstOrderOracle(dim), f_(std::move(f)), grad_(std::move(grad)) {
  if (!f_ || !grad_) throw ConfigError("function oracle needs both value and gradient");
}

Evaluation FunctionOracle::do_eval(const Point& x) const { return {f_(x), grad_(x)}; }

OraclePtr make_oracle(Index dim, FunctionOracle::ValueFn f, FunctionOracle::GradFn grad) {
  return std::make_shared<FunctionOracle>(dim, std::move(f), std::move(grad));
}

double finite_diff_check(const FirstOrderOracle& oracle, const Point& x, double h) {
  if (!(h > 0.0)) throw DomainError("finite difference step must be positive");
  const Evaluation e = oracle.eval(x);
  if (!std::isfinite(e.value) || !all_finite(e.subgradient))
    throw NumericalError("oracle returned non-finite values at the base point");
  double worst = 0.0;
  Point xp = x;
  for (Index i = 0; i < x.size(); ++i) {
    xp[i] = x[i] + h;
    const double fp = oracle.value(xp);
    xp[i] = x[i] - h;
    const double fm = oracle.value(xp);
    xp[i] = x[i];
    if (!std::isfinite(fp) || !std::isfinite(fm))
      throw NumericalError("oracle returned non-finite values near the base point");
    const double fd = (fp - fm) / (2.0 * h);
    const double g = e.subgradient[i];
    worst = std::max(worst, std::abs(fd - g) / (1.0 + std::abs(g)));
  }
  return worst;
}

}  // namespace fom
