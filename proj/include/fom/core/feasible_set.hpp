#pragma once

#include "fom/core/types.hpp"

#include <string>

namespace fom {

class FeasibleSet {
 public:
  enum class Kind { FreeSpace, Box, EuclideanBall, Simplex, NonnegOrthant, AffineFree };

  static FeasibleSet free_space(Index n);
  static FeasibleSet box(Point lo, Point hi);
  static FeasibleSet ball(Point center, double radius);
  static FeasibleSet simplex(Index n);
  static FeasibleSet nonneg_orthant(Index n);
  // First n_free coordinates unconstrained, the remaining n_nonneg kept >= 0.
  static FeasibleSet affine_free(Index n_free, Index n_nonneg);

  Kind kind() const { return kind_; }
  Index dim() const { return dim_; }
  bool bounded() const;
  const Point& lo() const { return lo_; }
  const Point& hi() const { return hi_; }
  const Point& center() const { return center_; }
  double radius() const { return radius_; }
  Index free_count() const { return free_count_; }

  bool contains(const Point& x, double tol = 1e-12) const;
  Point project(const Point& v) const;
  // argmin of <c, x> over the set; DomainError when the minimum is -inf.
  Point linear_argmin(const Point& c) const;
  double linear_min(const Point& c) const;
  double diameter() const;

  std::string name() const;

 private:
  FeasibleSet(Kind k, Index n) : kind_(k), dim_(n) {}

  Kind kind_;
  Index dim_;
  Point lo_, hi_, center_;
  double radius_ = 0.0;
  Index free_count_ = 0;
};

Point project_simplex_euclidean(const Point& v);

}  // namespace fom
