#include "fom/core/trace.hpp"

#include <limits>

namespace fom {

const Point& Trace::last() const {
  if (iterates.empty()) throw std::out_of_range("empty trace");
  return iterates.back();
}

double Trace::last_value() const {
  if (values.empty()) throw std::out_of_range("empty trace");
  return values.back();
}

void Trace::push(const Point& x, double f, double grad_norm, double step_L, double weight,
                 std::uint64_t grad_calls_total, std::uint64_t value_calls_total) {
  if (!iterates.empty()) require_same_dim(iterates.front(), x, "trace iterate");
  iterates.push_back(x);
  values.push_back(f);
  grad_norms.push_back(grad_norm);
  step_constants.push_back(step_L);
  weights.push_back(weight);
  grad_calls.push_back(grad_calls_total);
  value_calls.push_back(value_calls_total);
}

void Trace::set_uniform_weights(Averaging conv) {
  averaging = conv;
  const std::size_t n = iterates.size();
  weights.assign(n, 1.0);
  if (n == 1) return;
  if (conv == Averaging::FromOne) weights.front() = 0.0;
  else weights.back() = 0.0;
}

Point Trace::recompute_average() const {
  if (iterates.empty()) return Point();
  Point acc = Point::Zero(iterates.front().size());
  double total = 0.0;
  for (std::size_t k = 0; k < iterates.size(); ++k) {
    if (weights[k] == 0.0) continue;
    acc += weights[k] * iterates[k];
    total += weights[k];
  }
  if (total == 0.0) return iterates.front();
  return acc / total;
}

bool Trace::consistent() const {
  const std::size_t n = iterates.size();
  auto same = [n](std::size_t m) { return m == n; };
  auto optional_same = [n](std::size_t m) { return m == 0 || m == n; };
  return same(values.size()) && same(grad_norms.size()) && same(step_constants.size()) &&
         same(weights.size()) && same(grad_calls.size()) && same(value_calls.size()) &&
         optional_same(certificates.size()) && optional_same(subgradients.size());
}

}  // namespace fom
