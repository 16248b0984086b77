#pragma once

#include "fom/core/problem.hpp"
#include "fom/primal_dual/dual.hpp"
#include "fom/prox/geometry.hpp"
#include "fom/vi/mirror_prox.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fom {

struct ZooProblem {
  ZooProblem(Problem p, std::string tag) : problem(std::move(p)), family(std::move(tag)) {}

  Problem problem;
  std::string family;
  std::map<std::string, double> params;  // generator parameters, including the seed
  std::map<std::string, double> info;    // derived constants (bounds, Holder data)
  std::optional<Point> start;            // recommended x^0
  std::optional<Matrix> hessian;         // quadratic families
  std::optional<Point> linear_term;      // f = <Ax, x>/2 - <b, x>
  std::function<KnownOptimum()> reference_solver;

  double info_or(const std::string& key, double fallback) const;
};

// Quadratic with tridiagonal Hessian (L/4) tridiag(-1, 2, -1) on the first
// 2N+1 coordinates and linear term -(L/4) x_1. info: "lower_bound" holds
// (3L/32) R^2 / (N+1)^2 with R = ||x*|| (start at 0).
ZooProblem worst_case_smooth(double L, int N, Index n);

// L0 max_{i<=N} x_i + (mu/2)||x||^2 with mu = L0/(R sqrt N).
// Subgradient rule at ties: among the maximizing indices i <= N, the smallest
// one never returned before; if all were returned, the smallest maximizer.
// This oracle is stateful; call reset_adversary() before each run.
ZooProblem worst_case_nonsmooth(double L0, int N, double R, Index n);
void reset_adversary(const ZooProblem& zoo);

// 1/4 (x_1 - 1)^2 + sum (x_{i+1} - 2 x_i^2 + 1)^2. Nonconvex; x* = 1, f* = 0.
// info "L_box": Hessian norm bound on the box |x_i| <= 1.
ZooProblem nesterov_skokov(Index n);

// (L/2)||x||^2 inside ||x|| < R/theta^2, (L R/theta^2)||x|| - L R^2/(2 theta^4)
// outside. Gradient L x inside, (L R/theta^2) x/||x|| outside.
ZooProblem huber(double L, double R, double theta, Index n);

// ||x||^{1+nu}; info "L_nu" = (1+nu) 2^{1-nu}, the Holder constant of the
// gradient. Subgradient 0 at the origin.
ZooProblem power_norm(Index n, double nu);

// ||x|| + (mu/2)||x||^2; subgradient mu x at the origin.
ZooProblem norm_plus_quadratic(Index n, double mu);

// <Ax, x>/2 - <b, x>; spectrum of A in [mu, L] with both ends attained.
// x* is drawn from the seed and b = A x*.
ZooProblem random_quadratic(Index n, double mu, double L, std::uint64_t seed);

// The quadratic <Ax, x>/2 - <b, x> as a zoo problem; x* by linear solve.
ZooProblem quadratic_problem(Matrix A, Point b);

struct MatrixGame {
  Matrix C;
  SaddleSpec spec;
  FieldPtr field;  // g(u, w) = (C w, -C^T u)
  Geometry geometry = Geometry(ProxSetup::entropy(1));
  double L = 0.0;  // max |C_ij|
  Index m = 0, n = 0;

  Point start() const { return geometry.center(); }
  double gap(const Point& z) const;  // saddle gap of the stacked point (u, w)
};

// f(u, w) = u^T C w on the product of simplexes with entropy prox on each.
MatrixGame matrix_game(Matrix C);
MatrixGame random_matrix_game(Index m, Index n, std::uint64_t seed);

// phi(y) = mu sum y ln y on the simplex subject to Ay = b;
// y(x) = softmax(-A^T x / mu). The reference is computed by Newton's method
// on the smooth dual.
ConstrainedProgram entropy_linear(Matrix A, Point b, double mu);
ConstrainedProgram random_entropy_program(Index m, Index n, double mu, std::uint64_t seed);

std::vector<std::pair<int, int>> path_graph(int nodes);
Matrix laplacian(int nodes, const std::vector<std::pair<int, int>>& edges);
// phi(y) = sum a_i/2 (y_i - c_i)^2 subject to W y = 0 for the graph Laplacian W.
ConstrainedProgram consensus_problem(int nodes, const std::vector<std::pair<int, int>>& edges, Point a,
                                     Point c);

// |y|^2/2 subject to Ay = b (b in the range of A).
ConstrainedProgram min_norm_program(Matrix A, Point b);

// Resolves a family name and a parameter map; used by the benchmark configs.
ZooProblem make_zoo_problem(const std::string& family, const std::map<std::string, double>& params);
std::vector<std::string> zoo_families();

// Sampled check of the declared L1 (sandwich with delta = 0); returns the
// largest violation.
double declared_smoothness_violation(const ZooProblem& zoo, int pairs, double radius, std::uint64_t seed);

}  // namespace fom
