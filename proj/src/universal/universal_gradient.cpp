#include "fom/universal/universal_gradient.hpp"

#include "fom/primal_dual/certificate.hpp"

#include <cmath>
#include <limits>

namespace fom {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::optional<FeasibleSet> certificate_set(const ModelOracle& oracle, const Geometry& geometry,
                                           const Point& x0, const UniversalOptions& opt) {
  if (!oracle.composite().is_none()) return std::nullopt;
  if (opt.R) return FeasibleSet::ball(x0, 2.0 * *opt.R);
  if (geometry.single() && geometry.block(0).set().bounded()) return geometry.block(0).set();
  return std::nullopt;
}

}  // namespace

Trace universal_gradient(const ModelOracle& oracle, const Geometry& geometry, const Point& x0,
                         const UniversalOptions& opt) {
  if (!(opt.epsilon > 0.0)) throw ConfigError("universal method requires epsilon > 0");
  if (!(opt.L0 > 0.0)) throw ConfigError("universal method requires L0 > 0");
  if (opt.budget < 1 || opt.max_iterations < 0) throw ConfigError("universal method budgets must be positive");
  if (opt.R && !(*opt.R > 0.0)) throw ConfigError("certificate radius must be positive");
  require_dim(x0, oracle.dim(), "universal start");
  require_dim(x0, geometry.dim(), "universal start");
  if (!geometry.compatible(oracle.composite()))
    throw ConfigError("composite term has no exact step for this prox setup");
  if (!geometry.contains(x0)) throw DomainError("start point lies outside the feasible set");

  const std::uint64_t g_base = oracle.grad_calls(), v_base = oracle.value_calls();
  auto calls = [&] { return std::pair{oracle.grad_calls() - g_base, oracle.value_calls() - v_base}; };

  const std::optional<FeasibleSet> cert_set = certificate_set(oracle, geometry, x0, opt);
  LinearizationAccumulator acc(x0.size());
  Point weighted_sum = Point::Zero(x0.size());
  double weight_total = 0.0;

  Trace t;
  std::vector<double> trials_per_iter{0.0};
  Point x = x0;
  Model m = oracle.query(x);
  if (!std::isfinite(m.f_delta) || !all_finite(m.linear)) throw DivergenceError(0, "non-finite oracle output");
  const double f0 = oracle.value(x);
  {
    auto [gc, vc] = calls();
    t.push(x, f0, geometry.dual_norm(m.linear), opt.L0, 0.0, gc, vc);
    t.subgradients.push_back(m.linear);
    t.certificates.push_back(kNaN);
  }
  if (!cert_set) t.note(0, "no certificate set; stopping at the iteration cap only");

  double L = opt.L0;
  for (int k = 0; k < opt.max_iterations; ++k) {
    L *= 0.5;
    Point xp;
    double fp = 0.0;
    int trials = 0;
    for (;;) {
      if (++trials > opt.budget) throw AdaptivityError("inner budget exhausted without acceptance");
      xp = geometry.step(x, m.linear, 1.0 / L, m.composite);
      fp = oracle.value(xp);
      if (!std::isfinite(fp) || !all_finite(xp)) throw DivergenceError(k + 1, "non-finite trial point");
      const double rhs = m.f_delta + m.psi(xp) + L * geometry.bregman(xp, x) + 0.5 * opt.epsilon;
      if (fp <= rhs) break;
      L *= 2.0;
      if (!std::isfinite(L)) throw AdaptivityError("smoothness estimate overflowed");
    }
    const double w = 1.0 / L;
    acc.add(w, m.f_delta, m.linear, x);
    weighted_sum += w * xp;
    weight_total += w;

    x = std::move(xp);
    m = oracle.query(x);
    if (!all_finite(m.linear)) throw DivergenceError(k + 1, "non-finite oracle output");

    double cert = kNaN;
    if (cert_set) {
      const Point x_bar = weighted_sum / weight_total;
      cert = oracle.value(x_bar) - acc.lower_bound(*cert_set);
    }
    auto [gc, vc] = calls();
    t.push(x, fp, geometry.dual_norm(m.linear), L, w, gc, vc);
    t.subgradients.push_back(m.linear);
    t.certificates.push_back(cert);
    trials_per_iter.push_back(trials);
    if (cert_set && cert <= opt.epsilon) {
      t.converged = true;
      break;
    }
  }
  t.extras["inner_trials"] = std::move(trials_per_iter);
  t.averaging = Averaging::FromOne;
  t.finalize_average();
  return t;
}

double universal_iteration_bound(double L_nu, double nu, double R, double epsilon) {
  if (!(L_nu > 0.0 && R > 0.0 && epsilon > 0.0) || !(nu >= 0.0 && nu <= 1.0))
    throw DomainError("invalid arguments to the universal iteration bound");
  return std::pow(2.0 * L_nu * std::pow(R, 1.0 + nu) / epsilon, 2.0 / (1.0 + nu));
}

}  // namespace fom
