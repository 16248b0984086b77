#pragma once

#include "fom/core/types.hpp"

#include <map>
#include <string>
#include <vector>

namespace fom {

// Which iterates enter the running average. FromOne averages x^1..x^N,
// FromZero averages x^0..x^{N-1}. The convention is realized through the
// stored weights (the excluded iterate carries weight 0).
enum class Averaging { FromOne, FromZero };

struct TraceEvent {
  int iter = 0;
  std::string message;
};

struct Trace {
  std::vector<Point> iterates;
  std::vector<double> values;
  std::vector<double> grad_norms;      // dual norm of the (sub)gradient at the iterate, NaN if unknown
  std::vector<double> step_constants;  // the L actually used to produce the iterate
  std::vector<double> weights;
  std::vector<std::uint64_t> grad_calls;   // cumulative
  std::vector<std::uint64_t> value_calls;  // cumulative
  std::vector<double> certificates;        // empty or same length; NaN where not computed
  std::vector<Point> subgradients;         // empty or same length: oracle history at the iterates

  Point averaged_point;
  Averaging averaging = Averaging::FromOne;
  std::map<std::string, std::vector<double>> extras;
  std::vector<TraceEvent> events;
  bool converged = false;

  std::size_t size() const { return iterates.size(); }
  int iterations() const { return static_cast<int>(iterates.size()) - 1; }
  const Point& last() const;
  double last_value() const;

  void push(const Point& x, double f, double grad_norm, double step_L, double weight,
            std::uint64_t grad_calls_total, std::uint64_t value_calls_total);
  void note(int iter, std::string message) { events.push_back({iter, std::move(message)}); }

  // Uniform weights over the iterates selected by the averaging convention.
  void set_uniform_weights(Averaging conv);
  Point recompute_average() const;
  void finalize_average() { averaged_point = recompute_average(); }
  bool consistent() const;
};

}  // namespace fom
