#pragma once

#include "fom/core/trace.hpp"
#include "fom/model/model_oracle.hpp"
#include "fom/prox/geometry.hpp"

namespace fom {

// Accelerated method with one prox step per iteration:
//   y = (alpha u + A x) / A',  u' = argmin alpha psi(., y) + V(., u),
//   x' = (alpha u' + A x) / A',
// alpha_{k+1} = 1/(2L) + sqrt(1/(4L^2) + alpha_k^2), A_0 = alpha_0 = 0.
// With monotone set, x' is replaced by the best of {y, u', x'}.
// trace.extras holds "A" and "alpha".
Trace similar_triangles(const ModelOracle& oracle, const Geometry& geometry, double L, const Point& x0,
                        int N, bool monotone = false);

// V(x*, x0) / A_N.
double similar_triangles_gap_bound(const Geometry& geometry, const Point& x_star, const Point& x0,
                                   double A_N);

}  // namespace fom
