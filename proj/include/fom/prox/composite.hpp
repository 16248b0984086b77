#pragma once

#include "fom/core/feasible_set.hpp"

#include <functional>
#include <memory>

namespace fom {

class ProxSetup;

// Simple convex term g in F + g, carried by handle so mirror steps can use
// closed forms.
class CompositeTerm {
 public:
  enum class Kind { None, L1Scaled, EntropyScaled, IndicatorOfSet, Custom };

  using ValueFn = std::function<double(const Point&)>;
  // Exact argmin_u <h g, u> + h c(u) + V(u, x) over the setup's set.
  using StepFn = std::function<Point(const ProxSetup&, const Point& x, const Point& g, double h)>;

  CompositeTerm() = default;
  static CompositeTerm none() { return {}; }
  static CompositeTerm l1(double lambda);
  static CompositeTerm entropy(double mu);
  static CompositeTerm indicator(FeasibleSet set);
  static CompositeTerm custom(ValueFn value, StepFn step);

  Kind kind() const { return kind_; }
  bool is_none() const { return kind_ == Kind::None; }
  double weight() const { return weight_; }
  const FeasibleSet& indicator_set() const;
  const StepFn& custom_step() const { return step_; }

  // +inf outside the indicator set or the simplex (entropy term).
  double value(const Point& y) const;

 private:
  Kind kind_ = Kind::None;
  double weight_ = 0.0;
  std::shared_ptr<const FeasibleSet> set_;
  ValueFn value_;
  StepFn step_;
};

}  // namespace fom
