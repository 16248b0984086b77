#pragma once

#include "fom/prox/prox_setup.hpp"

#include <vector>

namespace fom {

// A prox setup, or a product of setups acting on consecutive coordinate
// blocks. The product norm is sqrt(sum ||x_b||^2), d is the sum of block d's.
class Geometry {
 public:
  Geometry(ProxSetup setup);  // NOLINT: single-block geometry converts implicitly
  static Geometry product(std::vector<ProxSetup> blocks);

  Index dim() const { return dim_; }
  std::size_t block_count() const { return blocks_.size(); }
  const ProxSetup& block(std::size_t i) const { return blocks_[i]; }
  Index offset(std::size_t i) const { return offsets_[i]; }
  bool single() const { return blocks_.size() == 1; }

  double bregman(const Point& x, const Point& y) const;
  Point grad_d(const Point& x) const;
  double max_radius(const Point& x0) const;
  Point step(const Point& x, const Point& g, double h,
             const CompositeTerm& composite = CompositeTerm::none()) const;
  bool compatible(const CompositeTerm& composite) const;

  double norm(const Point& v) const;
  double dual_norm(const Point& v) const;
  bool contains(const Point& x, double tol = 1e-9) const;
  bool bounded() const;
  Point linear_argmin(const Point& c) const;
  double linear_min(const Point& c) const { return c.dot(linear_argmin(c)); }
  // Default start: the prox center of each block (uniform point on simplexes).
  Point center() const;

 private:
  Geometry() = default;
  std::vector<ProxSetup> blocks_;
  std::vector<Index> offsets_;
  Index dim_ = 0;
};

}  // namespace fom
