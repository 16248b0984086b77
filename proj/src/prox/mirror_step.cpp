#include "fom/prox/prox_setup.hpp"

#include <cmath>

namespace fom {

namespace {

using K = FeasibleSet::Kind;
using CK = CompositeTerm::Kind;

bool same_set(const FeasibleSet& a, const FeasibleSet& b) {
  if (a.kind() != b.kind() || a.dim() != b.dim()) return false;
  switch (a.kind()) {
    case K::Box:
      return a.lo() == b.lo() && a.hi() == b.hi();
    case K::EuclideanBall:
      return a.center() == b.center() && a.radius() == b.radius();
    case K::AffineFree:
      return a.free_count() == b.free_count();
    default:
      return true;
  }
}

// Indicator terms that do not change the subproblem.
bool indicator_is_redundant(const ProxSetup& setup, const CompositeTerm& c) {
  const FeasibleSet& s = c.indicator_set();
  return s.kind() == K::FreeSpace || same_set(s, setup.set());
}

Point soft_threshold(const Point& v, double t) {
  return v.array().sign() * (v.array().abs() - t).cwiseMax(0.0);
}

// x_i exp(-h g_i) / (1 + h mu) in log space, then normalized.
Point entropy_update(const Point& x, const Point& g, double h, double mu) {
  const Index n = x.size();
  Point logits(n);
  for (Index i = 0; i < n; ++i) logits[i] = std::log(std::max(x[i], kEntropyFloor)) - h * g[i];
  logits /= (1.0 + h * mu);
  logits.array() -= logits.maxCoeff();
  Point u = logits.array().exp().matrix();
  u /= u.sum();
  return u.cwiseMax(kEntropyFloor) / u.cwiseMax(kEntropyFloor).sum();
}

}  // namespace

bool compatible(const ProxSetup& setup, const CompositeTerm& c) {
  switch (c.kind()) {
    case CK::None:
    case CK::Custom:
      return true;
    case CK::IndicatorOfSet:
      if (c.indicator_set().dim() != setup.dim()) return false;
      if (indicator_is_redundant(setup, c)) return true;
      return setup.kind() == ProxKind::EuclideanHalfSq && setup.set().kind() == K::FreeSpace;
    case CK::L1Scaled:
      if (setup.kind() == ProxKind::EntropySimplex) return true;  // constant on the simplex
      if (setup.kind() != ProxKind::EuclideanHalfSq) return false;
      switch (setup.set().kind()) {
        case K::FreeSpace:
        case K::Box:
        case K::NonnegOrthant:
        case K::Simplex:
          return true;
        default:
          return false;
      }
    case CK::EntropyScaled:
      return setup.kind() == ProxKind::EntropySimplex;
  }
  return false;
}

Point mirror_step(const ProxSetup& setup, const Point& x, const Point& g, double h,
                  const CompositeTerm& c) {
  require_dim(x, setup.dim(), "mirror step point");
  require_dim(g, setup.dim(), "mirror step direction");
  if (!(h > 0.0)) throw DomainError("mirror step size must be positive");
  if (!all_finite(g)) throw NumericalError("mirror step direction is not finite");
  if (!compatible(setup, c)) throw ConfigError("composite term has no exact step for this prox setup");

  if (c.kind() == CK::Custom) return c.custom_step()(setup, x, g, h);

  switch (setup.kind()) {
    case ProxKind::EuclideanHalfSq: {
      const Point v = x - h * g;
      if (c.kind() == CK::IndicatorOfSet && !indicator_is_redundant(setup, c))
        return c.indicator_set().project(v);
      // l1 is constant on the simplex; elsewhere the problem is separable.
      if (c.kind() == CK::L1Scaled && setup.set().kind() != K::Simplex)
        return setup.set().project(soft_threshold(v, h * c.weight()));
      return setup.set().project(v);
    }
    case ProxKind::EntropySimplex: {
      const double mu = c.kind() == CK::EntropyScaled ? c.weight() : 0.0;
      return entropy_update(x, g, h, mu);
    }
    case ProxKind::PNormSq:
      return pnorm_mirror_map_inverse(pnorm_mirror_map(x, setup.p()) - h * g, setup.p());
  }
  return x;
}

}  // namespace fom
