#include "fom/primal_dual/certificate.hpp"

#include <cmath>

namespace fom {

void LinearizationAccumulator::add(double weight, double f, const Point& g, const Point& x) {
  require_same_dim(sum_g_, g, "linearization gradient");
  require_same_dim(sum_g_, x, "linearization point");
  sum_w_ += weight;
  sum_c_ += weight * (f - g.dot(x));
  sum_g_ += weight * g;
}

double LinearizationAccumulator::lower_bound(const FeasibleSet& set) const {
  if (!(sum_w_ > 0.0)) throw DomainError("no linearizations accumulated");
  return (sum_c_ + set.linear_min(sum_g_)) / sum_w_;
}

double reference_radius(const FeasibleSet& set) {
  switch (set.kind()) {
    case FeasibleSet::Kind::EuclideanBall:
      return set.radius();
    case FeasibleSet::Kind::Box:
    case FeasibleSet::Kind::Simplex:
      return 0.5 * set.diameter();
    default:
      throw ConfigError("certificate needs a ball, box or simplex reference set");
  }
}

Certificate certificate(const Trace& trace, const FirstOrderOracle& oracle, const FeasibleSet& ball,
                        CertificateWeights weights) {
  const double radius = reference_radius(ball);
  if (trace.size() < 2) throw DomainError("certificate needs at least one step");
  if (trace.subgradients.size() != trace.size()) throw ConfigError("trace carries no oracle history");
  require_dim(trace.iterates.front(), ball.dim(), "certificate reference set");

  LinearizationAccumulator acc(ball.dim());
  const std::size_t N = trace.size() - 1;
  Point x_bar;
  if (weights == CertificateWeights::Uniform) {
    x_bar = Point::Zero(ball.dim());
    for (std::size_t k = 0; k < N; ++k) {
      acc.add(1.0, trace.values[k], trace.subgradients[k], trace.iterates[k]);
      x_bar += trace.iterates[k];
    }
    x_bar /= static_cast<double>(N);
  } else {
    for (std::size_t k = 0; k < N; ++k)
      acc.add(trace.weights[k + 1], trace.values[k], trace.subgradients[k], trace.iterates[k]);
    x_bar = trace.averaged_point;
  }
  return {oracle.value(x_bar) - acc.lower_bound(ball), radius};
}

}  // namespace fom
