#pragma once

#include "fom/core/problem.hpp"
#include "fom/core/trace.hpp"

#include <optional>

namespace fom {

// x^{k+1} = x^k - alpha grad f(x^k) + beta (x^k - x^{k-1}), x^{-1} = x^0.
Trace heavy_ball(const Problem& problem, const Point& x0, double alpha, double beta, int N);

// Convex variant uses the momentum coefficient (k-1)/(k+2), k = 0, 1, ...;
// with mu the constant (sqrt L - sqrt mu)/(sqrt L + sqrt mu).
Trace nesterov_momentum(const Problem& problem, const Point& x0, double L, std::optional<double> mu,
                        int N);

// Three sequences: x^{k+1} = tau z^k + (1 - tau) y^k, y^{k+1} = x^{k+1} - grad/L,
// z^{k+1} = z^k - h grad, with tau = 1/(L h + 1). The trace records y^k.
Trace linear_coupling(const Problem& problem, const Point& x0, double L, double h, int N);
// Same recursion with tau_k = 2/(k+2) and h_k = (k+2)/(2L).
Trace linear_coupling_schedule(const Problem& problem, const Point& x0, double L, int N);

}  // namespace fom
