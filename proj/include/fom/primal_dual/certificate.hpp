#pragma once

#include "fom/core/feasible_set.hpp"
#include "fom/core/oracle.hpp"
#include "fom/core/trace.hpp"

namespace fom {

// Running sums of the weighted linear lower model
//   l(u) = sum_k w_k [f(x^k) + <g^k, u - x^k>].
class LinearizationAccumulator {
 public:
  explicit LinearizationAccumulator(Index dim) : sum_g_(Point::Zero(dim)) {}

  void add(double weight, double f, const Point& g, const Point& x);
  double total_weight() const { return sum_w_; }
  // (1 / sum w) min over the set of l(u).
  double lower_bound(const FeasibleSet& set) const;

 private:
  double sum_w_ = 0.0;
  double sum_c_ = 0.0;  // sum w (f - <g, x>)
  Point sum_g_;
};

struct Certificate {
  double gap_value = 0.0;
  double reference_ball_radius = 0.0;
};

enum class CertificateWeights {
  Uniform,    // linearizations at x^0..x^{N-1}, x_bar their plain mean
  FromTrace,  // linearization at x^k weighted by the weight of x^{k+1}; x_bar = averaged_point
};

// Computable upper bound on f(x_bar) - f* whenever x* lies in `ball`. Uses the
// trace's oracle history; evaluates f(x_bar) once.
Certificate certificate(const Trace& trace, const FirstOrderOracle& oracle, const FeasibleSet& ball,
                        CertificateWeights weights = CertificateWeights::Uniform);

double reference_radius(const FeasibleSet& set);

}  // namespace fom
