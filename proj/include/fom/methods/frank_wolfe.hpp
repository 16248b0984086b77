#pragma once

#include "fom/core/trace.hpp"

namespace fom {

// Conditional gradient for f(x) = <Ax, x>/2 on the unit simplex, starting at a
// vertex. gamma_k = 2/(k+2); the vertex is the lowest index minimizing the
// partial derivative.
Trace frank_wolfe_simplex(const Matrix& A, const Point& x0, int N);

// 2 L R^2 / N with L = max |A_ij| and R^2 = 4.
double frank_wolfe_bound(const Matrix& A, int N);

}  // namespace fom
