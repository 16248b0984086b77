#pragma once

#include "fom/core/feasible_set.hpp"
#include "fom/core/trace.hpp"
#include "fom/prox/geometry.hpp"

#include <atomic>
#include <functional>
#include <memory>

namespace fom {

// Operator g of a variational inequality: find x in Q with <g(x), x - z> <= 0
// for all z in Q (weak form for monotone g).
class VectorField {
 public:
  using Fn = std::function<Point(const Point&)>;

  VectorField(Index dim, Fn g, bool monotone = true);
  VectorField(const VectorField&) = delete;
  VectorField& operator=(const VectorField&) = delete;

  Point eval(const Point& x) const;
  Index dim() const { return dim_; }
  bool monotone() const { return monotone_; }
  std::uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }

 private:
  Index dim_;
  Fn g_;
  bool monotone_;
  mutable std::atomic<std::uint64_t> calls_{0};
};

using FieldPtr = std::shared_ptr<const VectorField>;

// f(u, w) convex in u, concave in w on Qu x Qw. The exact inner solvers are
// optional; saddle_gap needs both.
struct SaddleSpec {
  FeasibleSet Qu = FeasibleSet::free_space(1);
  FeasibleSet Qw = FeasibleSet::free_space(1);
  std::function<double(const Point&, const Point&)> f;
  std::function<double(const Point&)> max_over_w;  // u -> max_w f(u, w)
  std::function<double(const Point&)> min_over_u;  // w -> min_u f(u, w)
};

// max_w f(u, w) - min_u f(u, w).
double saddle_gap(const SaddleSpec& spec, const Point& u, const Point& w);

// Largest sampled violation of <g(y) - g(x), y - x> >= 0.
double monotonicity_violation(const VectorField& field, const std::vector<std::pair<Point, Point>>& pairs);

// Fixed-L extragradient with Bregman steps:
//   y^{k+1} = step(x^k, g(x^k), 1/L),  x^{k+1} = step(x^k, g(y^{k+1}), 1/L).
// The trace holds x^0 followed by y^1..y^N, with g(y^k) as oracle history and
// uniform weights on y^1..y^N; certificates are the weighted gap when Q is bounded.
Trace mirror_prox(const VectorField& field, const Geometry& geometry, double L, const Point& x0, int N);

struct MirrorProxOptions {
  double epsilon = 1e-2;
  double L0 = 1.0;
  int budget = 64;
  int max_iterations = 1000000;
};

// Adaptive variant: halve L, double until
//   <g(y) - g(x), y - x+> <= L V(y, x) + L V(y, x+) + eps/2,
// weights 1/L on y. Stops when the weighted gap is at most epsilon.
Trace universal_mirror_prox(const VectorField& field, const Geometry& geometry, const Point& x0,
                            const MirrorProxOptions& options);

// (1 / sum w) sum w_k <g(y^k), y^k - x> from a mirror-prox trace.
double vi_residual(const Trace& trace, const Point& x);
// (1 / sum w) max over Q of sum w_k <g(y^k), y^k - x>.
double vi_weighted_gap(const Trace& trace, const Geometry& geometry);

}  // namespace fom
