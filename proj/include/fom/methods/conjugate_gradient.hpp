#pragma once

#include "fom/core/problem.hpp"
#include "fom/core/trace.hpp"

#include <optional>

namespace fom {

// Linear CG for f = <Ax, x>/2 - <b, x>. The trace stores true gradients
// Ax^k - b as the oracle history.
Trace cg_quadratic(const Matrix& A, const Point& b, const Point& x0, int N);

enum class CgVariant { FletcherReeves, PolakRibierePolyak };

struct LineSearch {
  double tol = 1e-10;
  int bracket_budget = 60;
  int max_bisections = 200;
  // When set, h = argmin over the real line is taken in closed form for
  // f = <Ax, x>/2 - <b, x>.
  std::optional<Matrix> quadratic;

  static LineSearch bisection(double tol) { return LineSearch{tol, 60, 200, std::nullopt}; }
  static LineSearch exact_quadratic(Matrix A) { return LineSearch{0.0, 0, 0, std::move(A)}; }
};

// p^0 = grad f(x^0), x^{k+1} = x^k + h_k p^k with h_k the exact line minimizer,
// p^{k+1} = grad f(x^{k+1}) - beta_k p^k; every restart_period steps p is reset
// to the gradient.
Trace nonlinear_cg(const Problem& problem, const Point& x0, CgVariant variant, int restart_period, int N,
                   const LineSearch& line_search);

}  // namespace fom
