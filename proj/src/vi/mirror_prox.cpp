#include "fom/vi/mirror_prox.hpp"

#include <cmath>
#include <limits>

namespace fom {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void validate(const VectorField& field, const Geometry& geometry, const Point& x0) {
  if (field.dim() != geometry.dim()) throw DimensionError("field and geometry dimensions differ");
  require_dim(x0, field.dim(), "mirror prox start");
  if (!geometry.contains(x0)) throw DomainError("start point lies outside the domain");
}

Point checked_eval(const VectorField& field, const Point& x, int k) {
  Point g = field.eval(x);
  if (!all_finite(g)) throw DivergenceError(k, "non-finite field value");
  return g;
}

// Running sums for the weighted gap (S - min_x <G, x>) / W.
struct GapAccumulator {
  explicit GapAccumulator(Index n) : G(Point::Zero(n)) {}
  void add(double w, const Point& g, const Point& y) {
    W += w;
    S += w * g.dot(y);
    G += w * g;
  }
  double gap(const Geometry& geometry) const { return (S - geometry.linear_min(G)) / W; }
  double W = 0.0, S = 0.0;
  Point G;
};

}  // namespace

VectorField::VectorField(Index dim, Fn g, bool monotone) : dim_(dim), g_(std::move(g)), monotone_(monotone) {
  if (dim <= 0) throw DimensionError("field dimension must be positive");
  if (!g_) throw ConfigError("vector field needs an operator");
}

Point VectorField::eval(const Point& x) const {
  require_dim(x, dim_, "vector field argument");
  calls_.fetch_add(1, std::memory_order_relaxed);
  Point g = g_(x);
  require_dim(g, dim_, "vector field value");
  return g;
}

double saddle_gap(const SaddleSpec& spec, const Point& u, const Point& w) {
  if (!spec.max_over_w || !spec.min_over_u) throw ConfigError("saddle spec has no exact inner solvers");
  require_dim(u, spec.Qu.dim(), "saddle primal point");
  require_dim(w, spec.Qw.dim(), "saddle dual point");
  return spec.max_over_w(u) - spec.min_over_u(w);
}

double monotonicity_violation(const VectorField& field, const std::vector<std::pair<Point, Point>>& pairs) {
  double worst = 0.0;
  for (const auto& [x, y] : pairs) worst = std::max(worst, -(field.eval(y) - field.eval(x)).dot(y - x));
  return worst;
}

Trace mirror_prox(const VectorField& field, const Geometry& geometry, double L, const Point& x0, int N) {
  if (!(L > 0.0)) throw ConfigError("mirror prox requires L > 0");
  if (N < 0) throw ConfigError("iteration count must be nonnegative");
  validate(field, geometry, x0);
  const std::uint64_t base = field.calls();
  const bool bounded = geometry.bounded();
  GapAccumulator acc(x0.size());

  Trace t;
  Point x = x0;
  Point gx = checked_eval(field, x, 0);
  t.push(x0, kNaN, geometry.dual_norm(gx), kNaN, 0.0, field.calls() - base, 0);
  t.subgradients.push_back(gx);
  t.certificates.push_back(kNaN);
  for (int k = 0; k < N; ++k) {
    const Point y = geometry.step(x, gx, 1.0 / L);
    const Point gy = checked_eval(field, y, k + 1);
    x = geometry.step(x, gy, 1.0 / L);
    if (!all_finite(x) || !all_finite(y)) throw DivergenceError(k + 1, "non-finite iterate");
    acc.add(1.0, gy, y);
    t.push(y, kNaN, geometry.dual_norm(gy), L, 1.0, field.calls() - base, 0);
    t.subgradients.push_back(gy);
    t.certificates.push_back(bounded ? acc.gap(geometry) : kNaN);
    if (k + 1 < N) gx = checked_eval(field, x, k + 1);
  }
  t.averaging = Averaging::FromOne;
  t.extras["x_last"] = std::vector<double>(x.data(), x.data() + x.size());
  t.finalize_average();
  return t;
}

Trace universal_mirror_prox(const VectorField& field, const Geometry& geometry, const Point& x0,
                            const MirrorProxOptions& opt) {
  if (!(opt.epsilon > 0.0) || !(opt.L0 > 0.0)) throw ConfigError("universal mirror prox requires epsilon, L0 > 0");
  if (opt.budget < 1 || opt.max_iterations < 0) throw ConfigError("universal mirror prox budgets must be positive");
  validate(field, geometry, x0);
  const std::uint64_t base = field.calls();
  const bool bounded = geometry.bounded();
  GapAccumulator acc(x0.size());

  Trace t;
  std::vector<double> trials_per_iter{0.0};
  Point x = x0;
  t.push(x0, kNaN, kNaN, opt.L0, 0.0, 0, 0);
  t.subgradients.push_back(Point::Zero(x0.size()));
  t.certificates.push_back(kNaN);
  double L = opt.L0;
  for (int k = 0; k < opt.max_iterations; ++k) {
    const Point gx = checked_eval(field, x, k);
    L *= 0.5;
    Point y, gy, xn;
    int trials = 0;
    for (;;) {
      if (++trials > opt.budget) throw AdaptivityError("inner budget exhausted without acceptance");
      y = geometry.step(x, gx, 1.0 / L);
      gy = checked_eval(field, y, k + 1);
      xn = geometry.step(x, gy, 1.0 / L);
      const double lhs = (gy - gx).dot(y - xn);
      const double rhs = L * geometry.bregman(y, x) + L * geometry.bregman(y, xn) + 0.5 * opt.epsilon;
      if (lhs <= rhs) break;
      L *= 2.0;
      if (!std::isfinite(L)) throw AdaptivityError("Lipschitz estimate overflowed");
    }
    const double w = 1.0 / L;
    acc.add(w, gy, y);
    x = std::move(xn);
    const double gap = bounded ? acc.gap(geometry) : kNaN;
    t.push(y, kNaN, geometry.dual_norm(gy), L, w, field.calls() - base, 0);
    t.subgradients.push_back(gy);
    t.certificates.push_back(gap);
    trials_per_iter.push_back(trials);
    if (bounded && gap <= opt.epsilon) {
      t.converged = true;
      break;
    }
  }
  t.extras["inner_trials"] = std::move(trials_per_iter);
  t.averaging = Averaging::FromOne;
  t.finalize_average();
  return t;
}

double vi_residual(const Trace& trace, const Point& x) {
  if (trace.subgradients.size() != trace.size()) throw ConfigError("trace carries no field history");
  double s = 0.0, W = 0.0;
  for (std::size_t k = 0; k < trace.size(); ++k) {
    const double w = trace.weights[k];
    if (w == 0.0) continue;
    s += w * trace.subgradients[k].dot(trace.iterates[k] - x);
    W += w;
  }
  if (!(W > 0.0)) throw DomainError("trace has no weighted iterates");
  return s / W;
}

double vi_weighted_gap(const Trace& trace, const Geometry& geometry) {
  if (trace.subgradients.size() != trace.size()) throw ConfigError("trace carries no field history");
  GapAccumulator acc(geometry.dim());
  for (std::size_t k = 0; k < trace.size(); ++k)
    if (trace.weights[k] != 0.0) acc.add(trace.weights[k], trace.subgradients[k], trace.iterates[k]);
  if (!(acc.W > 0.0)) throw DomainError("trace has no weighted iterates");
  return acc.gap(geometry);
}

}  // namespace fom
