#include "fom/methods/conjugate_gradient.hpp"

#include <cmath>
#include <limits>

namespace fom {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require_spd_shape(const Matrix& A, const Point& b) {
  if (A.rows() != A.cols() || A.rows() == 0) throw DimensionError("CG matrix must be square");
  require_dim(b, A.rows(), "CG right-hand side");
  if (!(A - A.transpose()).isZero(1e-12 * std::max(1.0, A.cwiseAbs().maxCoeff())))
    throw DomainError("CG matrix must be symmetric");
}

}  // namespace

Trace cg_quadratic(const Matrix& A, const Point& b, const Point& x0, int N) {
  require_spd_shape(A, b);
  require_dim(x0, A.rows(), "CG start");
  if (N < 0) throw ConfigError("iteration count must be nonnegative");

  auto record = [&](Trace& t, const Point& x, double step_L, std::uint64_t matvecs) {
    Point g = A * x - b;
    const double f = 0.5 * x.dot(A * x) - b.dot(x);
    t.push(x, f, g.norm(), step_L, 0.0, matvecs, 0);
    t.subgradients.push_back(std::move(g));
  };

  Trace t;
  Point x = x0;
  Point r = b - A * x;
  Point p = r;
  double rr = r.squaredNorm();
  std::uint64_t matvecs = 1;
  record(t, x, kNaN, matvecs);
  for (int k = 0; k < N; ++k) {
    if (rr == 0.0) {
      record(t, x, kNaN, matvecs);
      continue;
    }
    const Point Ap = A * p;
    ++matvecs;
    const double curv = p.dot(Ap);
    if (!(curv > 0.0)) throw NumericalError("CG breakdown: non-positive curvature direction");
    const double alpha = rr / curv;
    x += alpha * p;
    r -= alpha * Ap;
    const double rr_next = r.squaredNorm();
    p = r + (rr_next / rr) * p;
    rr = rr_next;
    if (!all_finite(x)) throw DivergenceError(k + 1, "CG iterate became non-finite");
    record(t, x, 1.0 / alpha, matvecs);
  }
  t.set_uniform_weights(Averaging::FromOne);
  t.finalize_average();
  t.converged = rr == 0.0 || std::sqrt(rr) <= 1e-12 * std::max(1.0, b.norm());
  return t;
}

namespace {

struct LineResult {
  double h = 0.0;
  bool ok = true;
};

// Minimizer of f(x + h p) over h in R via the sign of the directional derivative.
LineResult line_minimize(const FirstOrderOracle& o, const Point& x, const Point& g, const Point& p,
                         const LineSearch& ls) {
  if (ls.quadratic) {
    const double curv = p.dot(*ls.quadratic * p);
    if (!(curv > 0.0)) return {0.0, false};
    return {-g.dot(p) / curv, true};
  }
  const double slope0 = g.dot(p);
  if (slope0 == 0.0) return {0.0, false};
  // Search along d = sign * p, which is a descent direction.
  const double sign = slope0 < 0.0 ? 1.0 : -1.0;
  const Point d = sign * p;
  auto dphi = [&](double t) { return o.eval(x + t * d).subgradient.dot(d); };

  double lo = 0.0, hi = 1.0 / d.norm();
  bool bracketed = false;
  for (int i = 0; i < ls.bracket_budget; ++i) {
    const double s = dphi(hi);
    if (!std::isfinite(s)) break;
    if (s >= 0.0) {
      bracketed = true;
      break;
    }
    lo = hi;
    hi *= 2.0;
  }
  if (!bracketed) return {0.0, false};
  for (int i = 0; i < ls.max_bisections && hi - lo > ls.tol * std::max(1.0, hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double s = dphi(mid);
    if (s == 0.0) {
      lo = hi = mid;
      break;
    }
    (s < 0.0 ? lo : hi) = mid;
  }
  return {sign * 0.5 * (lo + hi), true};
}

// Armijo backtracking along -g, used when the line search fails.
Point gradient_fallback(const FirstOrderOracle& o, const Point& x, double f, const Point& g) {
  double t = 1.0;
  const double gg = g.squaredNorm();
  for (int i = 0; i < 100; ++i, t *= 0.5) {
    const Point trial = x - t * g;
    const double ft = o.value(trial);
    if (std::isfinite(ft) && ft <= f - 0.5 * t * gg) return trial;
  }
  return x;
}

}  // namespace

Trace nonlinear_cg(const Problem& problem, const Point& x0, CgVariant variant, int restart_period, int N,
                   const LineSearch& ls) {
  if (restart_period < 1) throw ConfigError("restart period must be at least 1");
  if (N < 0) throw ConfigError("iteration count must be nonnegative");
  if (problem.set().kind() != FeasibleSet::Kind::FreeSpace)
    throw ConfigError("nonlinear CG is implemented for unconstrained problems only");
  require_dim(x0, problem.dim(), "nonlinear CG start");
  if (ls.quadratic) require_dim(Point::Zero(ls.quadratic->rows()), problem.dim(), "line search matrix");
  if (!ls.quadratic && !(ls.tol > 0.0)) throw ConfigError("line search tolerance must be positive");

  const FirstOrderOracle& o = problem.oracle();
  const std::uint64_t g_base = o.grad_calls(), v_base = o.value_calls();
  Trace t;
  Point x = x0;
  Evaluation e = o.eval(x);
  if (!std::isfinite(e.value) || !all_finite(e.subgradient)) throw DivergenceError(0, "non-finite oracle output");
  Point p = e.subgradient;
  double step_L = kNaN;
  for (int k = 0;; ++k) {
    t.push(x, e.value, e.subgradient.norm(), step_L, 0.0, o.grad_calls() - g_base, o.value_calls() - v_base);
    t.subgradients.push_back(e.subgradient);
    if (k == N) break;

    const double gg = e.subgradient.squaredNorm();
    Point x_next = x;
    if (gg > 0.0) {
      const LineResult lr = line_minimize(o, x, e.subgradient, p, ls);
      if (lr.ok) {
        x_next = x + lr.h * p;
        step_L = lr.h != 0.0 ? 1.0 / std::abs(lr.h) : kNaN;
      } else {
        t.note(k, "line search failed; gradient step taken");
        x_next = gradient_fallback(o, x, e.value, e.subgradient);
        step_L = kNaN;
      }
    }
    if (!all_finite(x_next)) throw DivergenceError(k + 1, "iterate became non-finite");
    Evaluation e_next = o.eval(x_next);
    if (!std::isfinite(e_next.value) || !all_finite(e_next.subgradient))
      throw DivergenceError(k + 1, "non-finite oracle output");

    const Point& g1 = e_next.subgradient;
    if ((k + 1) % restart_period == 0 || gg == 0.0) {
      p = g1;
    } else {
      const double beta = variant == CgVariant::FletcherReeves
                              ? -g1.squaredNorm() / gg
                              : -g1.dot(g1 - e.subgradient) / gg;
      p = g1 - beta * p;
    }
    x = std::move(x_next);
    e = std::move(e_next);
  }
  t.set_uniform_weights(Averaging::FromOne);
  t.finalize_average();
  return t;
}

}  // namespace fom
