#pragma once

#include "fom/core/types.hpp"

namespace fom {

// p in [1, inf]; p = 2 is the Euclidean norm.
class NormSpec {
 public:
  NormSpec() = default;
  static NormSpec euclidean() { return NormSpec(); }
  static NormSpec lp(double p);
  static NormSpec linf();

  double p() const { return p_; }
  double dual_exponent() const;
  bool is_euclidean() const { return p_ == 2.0; }

  bool operator==(const NormSpec&) const = default;

 private:
  double p_ = 2.0;
};

double lp_norm(const Point& v, double p);
double norm(const Point& v, const NormSpec& spec);
double dual_norm(const Point& v, const NormSpec& spec);

}  // namespace fom
