#pragma once

#include "fom/core/types.hpp"

#include <atomic>
#include <functional>
#include <memory>

namespace fom {

struct Evaluation {
  double value = 0.0;
  Point subgradient;
};

// Zeroth/first-order oracle with call counters. Each eval() counts one
// gradient call, each value() one value call.
class FirstOrderOracle {
 public:
  explicit FirstOrderOracle(Index dim);
  virtual ~FirstOrderOracle() = default;
  FirstOrderOracle(const FirstOrderOracle&) = delete;
  FirstOrderOracle& operator=(const FirstOrderOracle&) = delete;

  Evaluation eval(const Point& x) const;
  double value(const Point& x) const;

  Index dim() const { return dim_; }
  std::uint64_t grad_calls() const { return grad_calls_.load(std::memory_order_relaxed); }
  std::uint64_t value_calls() const { return value_calls_.load(std::memory_order_relaxed); }
  void reset_counters() const;

 protected:
  virtual Evaluation do_eval(const Point& x) const = 0;
  virtual double do_value(const Point& x) const { return do_eval(x).value; }

 private:
  Index dim_;
  mutable std::atomic<std::uint64_t> grad_calls_{0};
  mutable std::atomic<std::uint64_t> value_calls_{0};
};

using OraclePtr = std::shared_ptr<const FirstOrderOracle>;

class FunctionOracle final : public FirstOrderOracle {
 public:
  using ValueFn = std::function<double(const Point&)>;
  using GradFn = std::function<Point(const Point&)>;

  FunctionOracle(Index dim, ValueFn f, GradFn grad);

 protected:
  Evaluation do_eval(const Point& x) const override;
  double do_value(const Point& x) const override { return f_(x); }

 private:
  ValueFn f_;
  GradFn grad_;
};

OraclePtr make_oracle(Index dim, FunctionOracle::ValueFn f, FunctionOracle::GradFn grad);

// max_i |central difference - reported partial| / (1 + |reported partial|).
double finite_diff_check(const FirstOrderOracle& oracle, const Point& x, double h);

}  // namespace fom
