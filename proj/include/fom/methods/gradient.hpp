#pragma once

#include "fom/core/problem.hpp"
#include "fom/core/trace.hpp"
#include "fom/model/model_oracle.hpp"
#include "fom/prox/geometry.hpp"

#include <functional>
#include <vector>

namespace fom {

class StepRule {
 public:
  enum class Kind { FixedInverseL, Sequence, ExactQuadraticLineSearch };

  static StepRule fixed_inverse_L(double L);
  static StepRule sequence(std::function<double(int)> h);
  static StepRule sequence(std::vector<double> h);
  static StepRule constant(double h);
  // h = ||g||^2 / <A g, g> for f = <Ax, x>/2 - <b, x>.
  static StepRule exact_quadratic(Matrix A);

  Kind kind() const { return kind_; }
  double L() const { return L_; }
  double size(int k, const Point& g) const;

 private:
  Kind kind_ = Kind::FixedInverseL;
  double L_ = 1.0;
  std::function<double(int)> seq_;
  Matrix A_;
};

// Projected (onto problem.set()) gradient descent; N steps, N+1 iterates.
Trace gradient_descent(const Problem& problem, const Point& x0, const StepRule& step, int N,
                       Averaging averaging = Averaging::FromOne);

// Constant step R / (L0 sqrt(N)); the average runs over x^0..x^{N-1}.
Trace subgradient_descent(const Problem& problem, const Point& x0, double R, double L0, int N);

// x^{k+1} = argmin psi(x, x^k) + L V(x, x^k); uniform weights on x^1..x^N.
Trace model_gradient_method(const ModelOracle& oracle, const Geometry& geometry, double L,
                            const Point& x0, int N);

}  // namespace fom
