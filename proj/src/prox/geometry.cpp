#include "fom/prox/geometry.hpp"

#include <cmath>

namespace fom {

Geometry::Geometry(ProxSetup setup) : blocks_{std::move(setup)}, offsets_{0} {
  dim_ = blocks_.front().dim();
}

Geometry Geometry::product(std::vector<ProxSetup> blocks) {
  if (blocks.empty()) throw ConfigError("product geometry needs at least one block");
  Geometry g;
  for (auto& b : blocks) {
    g.offsets_.push_back(g.dim_);
    g.dim_ += b.dim();
    g.blocks_.push_back(std::move(b));
  }
  return g;
}

double Geometry::bregman(const Point& x, const Point& y) const {
  require_dim(x, dim_, "geometry bregman");
  require_dim(y, dim_, "geometry bregman");
  double v = 0.0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Index o = offsets_[i], n = blocks_[i].dim();
    v += fom::bregman(blocks_[i], x.segment(o, n), y.segment(o, n));
  }
  return v;
}

Point Geometry::grad_d(const Point& x) const {
  require_dim(x, dim_, "geometry prox gradient");
  Point out(dim_);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Index o = offsets_[i], n = blocks_[i].dim();
    out.segment(o, n) = prox_gradient(blocks_[i], x.segment(o, n));
  }
  return out;
}

double Geometry::max_radius(const Point& x0) const {
  require_dim(x0, dim_, "geometry radius");
  double v = 0.0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Index o = offsets_[i], n = blocks_[i].dim();
    v += max_bregman_radius(blocks_[i], x0.segment(o, n));
  }
  return v;
}

bool Geometry::compatible(const CompositeTerm& composite) const {
  if (single()) return fom::compatible(blocks_.front(), composite);
  return composite.is_none();
}

Point Geometry::step(const Point& x, const Point& g, double h, const CompositeTerm& composite) const {
  if (single()) return mirror_step(blocks_.front(), x, g, h, composite);
  if (!composite.is_none()) throw ConfigError("composite terms are not supported on product geometries");
  require_dim(x, dim_, "geometry step");
  require_dim(g, dim_, "geometry step");
  Point out(dim_);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Index o = offsets_[i], n = blocks_[i].dim();
    out.segment(o, n) = mirror_step(blocks_[i], x.segment(o, n), g.segment(o, n), h);
  }
  return out;
}

double Geometry::norm(const Point& v) const {
  require_dim(v, dim_, "geometry norm");
  double s = 0.0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const double b = fom::norm(v.segment(offsets_[i], blocks_[i].dim()), blocks_[i].norm());
    s += b * b;
  }
  return std::sqrt(s);
}

double Geometry::dual_norm(const Point& v) const {
  require_dim(v, dim_, "geometry dual norm");
  double s = 0.0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const double b = fom::dual_norm(v.segment(offsets_[i], blocks_[i].dim()), blocks_[i].norm());
    s += b * b;
  }
  return std::sqrt(s);
}

bool Geometry::contains(const Point& x, double tol) const {
  if (x.size() != dim_) return false;
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (!blocks_[i].set().contains(x.segment(offsets_[i], blocks_[i].dim()), tol)) return false;
  return true;
}

bool Geometry::bounded() const {
  for (const auto& b : blocks_)
    if (!b.set().bounded()) return false;
  return true;
}

Point Geometry::linear_argmin(const Point& c) const {
  require_dim(c, dim_, "geometry linear minimization");
  Point out(dim_);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Index o = offsets_[i], n = blocks_[i].dim();
    out.segment(o, n) = blocks_[i].set().linear_argmin(c.segment(o, n));
  }
  return out;
}

Point Geometry::center() const {
  Point out = Point::Zero(dim_);
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Index o = offsets_[i], n = blocks_[i].dim();
    const FeasibleSet& s = blocks_[i].set();
    switch (s.kind()) {
      case FeasibleSet::Kind::Simplex:
        out.segment(o, n).setConstant(1.0 / static_cast<double>(n));
        break;
      case FeasibleSet::Kind::Box:
        out.segment(o, n) = 0.5 * (s.lo() + s.hi());
        break;
      case FeasibleSet::Kind::EuclideanBall:
        out.segment(o, n) = s.center();
        break;
      default:
        break;
    }
  }
  return out;
}

}  // namespace fom
