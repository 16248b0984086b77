#include "fom/universal/similar_triangles.hpp"

#include <cmath>
#include <limits>

namespace fom {

Trace similar_triangles(const ModelOracle& oracle, const Geometry& geometry, double L, const Point& x0,
                        int N, bool monotone) {
  if (!(L > 0.0)) throw ConfigError("similar triangles requires L > 0");
  if (N < 0) throw ConfigError("iteration count must be nonnegative");
  require_dim(x0, oracle.dim(), "similar triangles start");
  require_dim(x0, geometry.dim(), "similar triangles start");
  if (!geometry.compatible(oracle.composite()))
    throw ConfigError("composite term has no exact step for this prox setup");
  if (!geometry.contains(x0)) throw DomainError("start point lies outside the feasible set");

  const std::uint64_t g_base = oracle.grad_calls(), v_base = oracle.value_calls();
  auto checked_value = [&](const Point& p, int k) {
    const double f = oracle.value(p);
    if (!std::isfinite(f) || !all_finite(p)) throw DivergenceError(k, "non-finite iterate");
    return f;
  };

  Trace t;
  std::vector<double> As{0.0}, alphas{0.0};
  double A = 0.0, alpha = 0.0;
  Point x = x0, u = x0;
  double fx = checked_value(x, 0);
  t.push(x, fx, std::numeric_limits<double>::quiet_NaN(), std::numeric_limits<double>::quiet_NaN(), 0.0,
         oracle.grad_calls() - g_base, oracle.value_calls() - v_base);
  for (int k = 0; k < N; ++k) {
    alpha = 0.5 / L + std::sqrt(0.25 / (L * L) + alpha * alpha);
    const double A_next = A + alpha;
    const Point y = (alpha * u + A * x) / A_next;
    const Model m = oracle.query(y);
    if (!all_finite(m.linear)) throw DivergenceError(k + 1, "non-finite oracle output");
    u = geometry.step(u, m.linear, alpha, m.composite);
    Point x_next = (alpha * u + A * x) / A_next;
    double f_next = checked_value(x_next, k + 1);
    if (monotone) {
      const double fy = checked_value(y, k + 1);
      const double fu = checked_value(u, k + 1);
      if (fy < f_next) {
        x_next = y;
        f_next = fy;
      }
      if (fu < f_next) {
        x_next = u;
        f_next = fu;
      }
    }
    x = std::move(x_next);
    fx = f_next;
    A = A_next;
    t.push(x, fx, std::numeric_limits<double>::quiet_NaN(), L, alpha, oracle.grad_calls() - g_base,
           oracle.value_calls() - v_base);
    As.push_back(A);
    alphas.push_back(alpha);
  }
  t.extras["A"] = std::move(As);
  t.extras["alpha"] = std::move(alphas);
  t.averaging = Averaging::FromOne;
  t.finalize_average();
  return t;
}

double similar_triangles_gap_bound(const Geometry& geometry, const Point& x_star, const Point& x0,
                                   double A_N) {
  if (!(A_N > 0.0)) throw DomainError("A_N must be positive");
  return geometry.bregman(x_star, x0) / A_N;
}

}  // namespace fom
