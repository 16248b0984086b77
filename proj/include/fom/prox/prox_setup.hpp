#pragma once

#include "fom/core/feasible_set.hpp"
#include "fom/core/norms.hpp"
#include "fom/prox/composite.hpp"

namespace fom {

enum class ProxKind { EuclideanHalfSq, EntropySimplex, PNormSq };

// Norm, 1-strongly convex prox-function d and the set it lives on.
class ProxSetup {
 public:
  ProxSetup(NormSpec norm, ProxKind kind, FeasibleSet set);

  static ProxSetup euclidean(FeasibleSet set);
  static ProxSetup entropy(Index n);
  static ProxSetup pnorm(Index n, double p);

  const NormSpec& norm() const { return norm_; }
  ProxKind kind() const { return kind_; }
  const FeasibleSet& set() const { return set_; }
  Index dim() const { return set_.dim(); }
  double p() const { return norm_.p(); }

 private:
  NormSpec norm_;
  ProxKind kind_;
  FeasibleSet set_;
};

double prox_function(const ProxSetup& setup, const Point& x);
Point prox_gradient(const ProxSetup& setup, const Point& x);

// V(x, y) = d(x) - d(y) - <grad d(y), x - y>.
double bregman(const ProxSetup& setup, const Point& x, const Point& y);
double prox_radius(const ProxSetup& setup, const Point& x0, const Point& x);
// max over the set of V(x, x0); +inf on unbounded sets.
double max_bregman_radius(const ProxSetup& setup, const Point& x0);

bool compatible(const ProxSetup& setup, const CompositeTerm& composite);

// argmin over the set of <h g, u> + h c(u) + V(u, x).
Point mirror_step(const ProxSetup& setup, const Point& x, const Point& g, double h,
                  const CompositeTerm& composite = CompositeTerm::none());

// grad d for d(x) = ||x||_p^2 / (2(p-1)) and its inverse.
Point pnorm_mirror_map(const Point& x, double p);
Point pnorm_mirror_map_inverse(const Point& s, double p);

// Coordinates below this floor are clamped before taking logs.
inline constexpr double kEntropyFloor = 1e-300;

}  // namespace fom
