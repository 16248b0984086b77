#include "fom/core/feasible_set.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

namespace fom {

namespace {

void require_positive_dim(Index n) {
  if (n <= 0) throw DimensionError("feasible set dimension must be positive");
}

}  // namespace

FeasibleSet FeasibleSet::free_space(Index n) {
  require_positive_dim(n);
  return FeasibleSet(Kind::FreeSpace, n);
}

FeasibleSet FeasibleSet::box(Point lo, Point hi) {
  require_positive_dim(lo.size());
  require_same_dim(lo, hi, "box bounds");
  if ((lo.array() > hi.array()).any()) throw DomainError("box requires lo <= hi coordinatewise");
  FeasibleSet s(Kind::Box, lo.size());
  s.lo_ = std::move(lo);
  s.hi_ = std::move(hi);
  return s;
}

FeasibleSet FeasibleSet::ball(Point center, double radius) {
  require_positive_dim(center.size());
  if (!(radius > 0.0)) throw DomainError("ball radius must be positive");
  FeasibleSet s(Kind::EuclideanBall, center.size());
  s.center_ = std::move(center);
  s.radius_ = radius;
  return s;
}

FeasibleSet FeasibleSet::simplex(Index n) {
  require_positive_dim(n);
  return FeasibleSet(Kind::Simplex, n);
}

FeasibleSet FeasibleSet::nonneg_orthant(Index n) {
  require_positive_dim(n);
  return FeasibleSet(Kind::NonnegOrthant, n);
}

FeasibleSet FeasibleSet::affine_free(Index n_free, Index n_nonneg) {
  if (n_free < 0 || n_nonneg < 0) throw DimensionError("negative block size");
  require_positive_dim(n_free + n_nonneg);
  FeasibleSet s(Kind::AffineFree, n_free + n_nonneg);
  s.free_count_ = n_free;
  return s;
}

bool FeasibleSet::bounded() const {
  return kind_ == Kind::Box || kind_ == Kind::EuclideanBall || kind_ == Kind::Simplex;
}

bool FeasibleSet::contains(const Point& x, double tol) const {
  if (x.size() != dim_ || !all_finite(x)) return false;
  switch (kind_) {
    case Kind::FreeSpace:
      return true;
    case Kind::Box:
      return ((x - lo_).array() >= -tol).all() && ((hi_ - x).array() >= -tol).all();
    case Kind::EuclideanBall:
      return (x - center_).norm() <= radius_ * (1.0 + tol) + tol;
    case Kind::Simplex:
      return (x.array() >= -tol).all() && std::abs(x.sum() - 1.0) <= tol * dim_;
    case Kind::NonnegOrthant:
      return (x.array() >= -tol).all();
    case Kind::AffineFree:
      return (x.tail(dim_ - free_count_).array() >= -tol).all();
  }
  return false;
}

Point FeasibleSet::project(const Point& v) const {
  require_dim(v, dim_, "projection");
  switch (kind_) {
    case Kind::FreeSpace:
      return v;
    case Kind::Box:
      return v.cwiseMax(lo_).cwiseMin(hi_);
    case Kind::EuclideanBall: {
      const Point d = v - center_;
      const double r = d.norm();
      return r <= radius_ ? v : Point(center_ + (radius_ / r) * d);
    }
    case Kind::Simplex:
      return project_simplex_euclidean(v);
    case Kind::NonnegOrthant:
      return v.cwiseMax(0.0);
    case Kind::AffineFree: {
      Point out = v;
      out.tail(dim_ - free_count_) = out.tail(dim_ - free_count_).cwiseMax(0.0);
      return out;
    }
  }
  return v;
}

Point FeasibleSet::linear_argmin(const Point& c) const {
  require_dim(c, dim_, "linear minimization");
  switch (kind_) {
    case Kind::Box: {
      Point x(dim_);
      for (Index i = 0; i < dim_; ++i) x[i] = c[i] > 0.0 ? lo_[i] : (c[i] < 0.0 ? hi_[i] : lo_[i]);
      return x;
    }
    case Kind::EuclideanBall: {
      const double cn = c.norm();
      if (cn == 0.0) return center_;
      return center_ - (radius_ / cn) * c;
    }
    case Kind::Simplex: {
      return Point::Unit(dim_, first_argmin(c));
    }
    case Kind::NonnegOrthant:
      if ((c.array() >= 0.0).all()) return Point::Zero(dim_);
      break;
    case Kind::AffineFree:
      if (c.head(free_count_).isZero(0.0) && (c.tail(dim_ - free_count_).array() >= 0.0).all())
        return Point::Zero(dim_);
      break;
    case Kind::FreeSpace:
      if (c.isZero(0.0)) return Point::Zero(dim_);
      break;
  }
  throw DomainError("linear function is unbounded below on " + name());
}

double FeasibleSet::linear_min(const Point& c) const { return c.dot(linear_argmin(c)); }

double FeasibleSet::diameter() const {
  switch (kind_) {
    case Kind::Box:
      return (hi_ - lo_).norm();
    case Kind::EuclideanBall:
      return 2.0 * radius_;
    case Kind::Simplex:
      return dim_ > 1 ? std::sqrt(2.0) : 0.0;
    default:
      return std::numeric_limits<double>::infinity();
  }
}

std::string FeasibleSet::name() const {
  switch (kind_) {
    case Kind::FreeSpace: return "free_space";
    case Kind::Box: return "box";
    case Kind::EuclideanBall: return "ball";
    case Kind::Simplex: return "simplex";
    case Kind::NonnegOrthant: return "nonneg_orthant";
    case Kind::AffineFree: return "affine_free";
  }
  return "unknown";
}

// Sorted-threshold projection onto {y >= 0, sum y = 1}.
Point project_simplex_euclidean(const Point& v) {
  const Index n = v.size();
  if (n == 0) throw DimensionError("simplex projection of an empty vector");
  std::vector<double> u(v.data(), v.data() + n);
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumsum = 0.0, theta = 0.0;
  for (Index j = 0; j < n; ++j) {
    cumsum += u[j];
    const double t = (cumsum - 1.0) / static_cast<double>(j + 1);
    if (u[j] - t > 0.0) theta = t;
  }
  Point y = (v.array() - theta).cwiseMax(0.0);
  const double s = y.sum();
  if (s > 0.0) y /= s;  // removes rounding drift from the sum
  return y;
}

}  // namespace fom
