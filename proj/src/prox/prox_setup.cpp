#include "fom/prox/prox_setup.hpp"

#include <cmath>
#include <limits>

namespace fom {

CompositeTerm CompositeTerm::l1(double lambda) {
  if (!(lambda >= 0.0)) throw DomainError("l1 weight must be nonnegative");
  CompositeTerm c;
  c.kind_ = Kind::L1Scaled;
  c.weight_ = lambda;
  return c;
}

CompositeTerm CompositeTerm::entropy(double mu) {
  if (!(mu >= 0.0)) throw DomainError("entropy weight must be nonnegative");
  CompositeTerm c;
  c.kind_ = Kind::EntropyScaled;
  c.weight_ = mu;
  return c;
}

CompositeTerm CompositeTerm::indicator(FeasibleSet set) {
  CompositeTerm c;
  c.kind_ = Kind::IndicatorOfSet;
  c.set_ = std::make_shared<const FeasibleSet>(std::move(set));
  return c;
}

CompositeTerm CompositeTerm::custom(ValueFn value, StepFn step) {
  if (!value || !step) throw ConfigError("custom composite needs a value and an exact step");
  CompositeTerm c;
  c.kind_ = Kind::Custom;
  c.value_ = std::move(value);
  c.step_ = std::move(step);
  return c;
}

const FeasibleSet& CompositeTerm::indicator_set() const {
  if (!set_) throw std::logic_error("composite term is not an indicator");
  return *set_;
}

double CompositeTerm::value(const Point& y) const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  switch (kind_) {
    case Kind::None:
      return 0.0;
    case Kind::L1Scaled:
      return weight_ * y.lpNorm<1>();
    case Kind::EntropyScaled: {
      if ((y.array() < 0.0).any()) return inf;
      double s = 0.0;
      for (Index i = 0; i < y.size(); ++i)
        if (y[i] > 0.0) s += y[i] * std::log(y[i]);
      return weight_ * s;
    }
    case Kind::IndicatorOfSet:
      return set_->contains(y, 1e-9) ? 0.0 : inf;
    case Kind::Custom:
      return value_(y);
  }
  return 0.0;
}

ProxSetup::ProxSetup(NormSpec norm, ProxKind kind, FeasibleSet set)
    : norm_(norm), kind_(kind), set_(std::move(set)) {
  using K = FeasibleSet::Kind;
  switch (kind_) {
    case ProxKind::EuclideanHalfSq:
      if (!norm_.is_euclidean()) throw ConfigError("euclidean prox requires the euclidean norm");
      break;
    case ProxKind::EntropySimplex:
      if (set_.kind() != K::Simplex) throw ConfigError("entropy prox requires the simplex");
      if (norm_.p() != 1.0) throw ConfigError("entropy prox is strongly convex in the l1 norm");
      break;
    case ProxKind::PNormSq:
      if (set_.kind() != K::FreeSpace) throw ConfigError("p-norm prox is supported on free space only");
      if (!(norm_.p() > 1.0 && norm_.p() <= 2.0)) throw ConfigError("p-norm prox requires 1 < p <= 2");
      break;
  }
}

ProxSetup ProxSetup::euclidean(FeasibleSet set) {
  return ProxSetup(NormSpec::euclidean(), ProxKind::EuclideanHalfSq, std::move(set));
}

ProxSetup ProxSetup::entropy(Index n) {
  return ProxSetup(NormSpec::lp(1.0), ProxKind::EntropySimplex, FeasibleSet::simplex(n));
}

ProxSetup ProxSetup::pnorm(Index n, double p) {
  return ProxSetup(NormSpec::lp(p), ProxKind::PNormSq, FeasibleSet::free_space(n));
}

double prox_function(const ProxSetup& setup, const Point& x) {
  require_dim(x, setup.dim(), "prox function");
  switch (setup.kind()) {
    case ProxKind::EuclideanHalfSq:
      return 0.5 * x.squaredNorm();
    case ProxKind::EntropySimplex: {
      double s = 0.0;
      for (Index i = 0; i < x.size(); ++i) {
        if (x[i] < 0.0) throw DomainError("entropy evaluated at a negative coordinate");
        if (x[i] > 0.0) s += x[i] * std::log(x[i]);
      }
      return s;
    }
    case ProxKind::PNormSq: {
      const double n = lp_norm(x, setup.p());
      return n * n / (2.0 * (setup.p() - 1.0));
    }
  }
  return 0.0;
}

Point prox_gradient(const ProxSetup& setup, const Point& x) {
  require_dim(x, setup.dim(), "prox gradient");
  switch (setup.kind()) {
    case ProxKind::EuclideanHalfSq:
      return x;
    case ProxKind::EntropySimplex:
      if ((x.array() <= 0.0).any()) throw DomainError("entropy gradient needs strictly positive coordinates");
      return (x.array().log() + 1.0).matrix();
    case ProxKind::PNormSq:
      return pnorm_mirror_map(x, setup.p());
  }
  return x;
}

double bregman(const ProxSetup& setup, const Point& x, const Point& y) {
  require_same_dim(x, y, "bregman");
  require_dim(x, setup.dim(), "bregman");
  switch (setup.kind()) {
    case ProxKind::EuclideanHalfSq:
      return 0.5 * (x - y).squaredNorm();
    case ProxKind::EntropySimplex: {
      // Generalized KL; equals sum x ln(x/y) on the simplex.
      double v = 0.0;
      for (Index i = 0; i < x.size(); ++i) {
        if (y[i] <= 0.0) throw DomainError("entropy bregman needs strictly positive reference point");
        if (x[i] < 0.0) throw DomainError("entropy bregman at a negative coordinate");
        if (x[i] > 0.0) v += x[i] * std::log(x[i] / y[i]);
        v += y[i] - x[i];
      }
      return std::max(v, 0.0);
    }
    case ProxKind::PNormSq: {
      const double v = prox_function(setup, x) - prox_function(setup, y) -
                       pnorm_mirror_map(y, setup.p()).dot(x - y);
      return std::max(v, 0.0);
    }
  }
  return 0.0;
}

double prox_radius(const ProxSetup& setup, const Point& x0, const Point& x) {
  return bregman(setup, x, x0);
}

double max_bregman_radius(const ProxSetup& setup, const Point& x0) {
  require_dim(x0, setup.dim(), "prox radius");
  constexpr double inf = std::numeric_limits<double>::infinity();
  const FeasibleSet& s = setup.set();
  using K = FeasibleSet::Kind;
  switch (setup.kind()) {
    case ProxKind::EntropySimplex: {
      const double m = x0.minCoeff();
      if (m <= 0.0) throw DomainError("entropy radius needs a strictly positive start");
      return -std::log(m);
    }
    case ProxKind::PNormSq:
      return inf;
    case ProxKind::EuclideanHalfSq:
      switch (s.kind()) {
        case K::Box:
          return 0.5 * (s.lo() - x0).cwiseAbs2().cwiseMax((s.hi() - x0).cwiseAbs2()).sum();
        case K::EuclideanBall: {
          const double r = s.radius() + (x0 - s.center()).norm();
          return 0.5 * r * r;
        }
        case K::Simplex:
          return 0.5 * (x0.squaredNorm() - 2.0 * x0.minCoeff() + 1.0);
        default:
          return inf;
      }
  }
  return inf;
}

Point pnorm_mirror_map(const Point& x, double p) {
  if (!(p > 1.0 && p <= 2.0)) throw DomainError("p-norm mirror map requires 1 < p <= 2");
  const double n = lp_norm(x, p);
  if (n == 0.0) return Point::Zero(x.size());
  Point s(x.size());
  for (Index i = 0; i < x.size(); ++i) {
    const double a = std::abs(x[i]) / n;
    s[i] = std::copysign(n * std::pow(a, p - 1.0), x[i]) / (p - 1.0);
  }
  return s;
}

Point pnorm_mirror_map_inverse(const Point& s, double p) {
  if (!(p > 1.0 && p <= 2.0)) throw DomainError("p-norm mirror map requires 1 < p <= 2");
  const double q = p / (p - 1.0);
  const double n = lp_norm(s, q);
  if (n == 0.0) return Point::Zero(s.size());
  Point x(s.size());
  for (Index i = 0; i < s.size(); ++i) {
    const double a = std::abs(s[i]) / n;
    x[i] = std::copysign((p - 1.0) * n * std::pow(a, q - 1.0), s[i]);
  }
  return x;
}

}  // namespace fom
