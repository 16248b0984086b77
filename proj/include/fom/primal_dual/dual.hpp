#pragma once

#include "fom/core/problem.hpp"
#include "fom/core/trace.hpp"
#include "fom/prox/prox_setup.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace fom {

struct ProgramReference {
  Point y_star;
  double phi_star = 0.0;
  Point x_star;  // minimal-norm dual solution
};

// phi(y) -> min subject to Ay = b, y in set, with phi mu-strongly convex in
// the p-norm (p in {1, 2}). inner_solver(x) returns the exact maximizer of
// <x, b - Ay> - phi(y) over the set.
struct ConstrainedProgram {
  OraclePtr phi;
  double mu = 1.0;
  int p = 2;
  Matrix A;
  Point b;
  FeasibleSet set = FeasibleSet::free_space(1);
  std::function<Point(const Point&)> inner_solver;
  std::optional<ProgramReference> reference;

  void validate() const;
  Index dual_dim() const { return A.rows(); }
  Index primal_dim() const { return A.cols(); }
};

// f(x) = <x, b - A y(x)> - phi(y(x)), grad f(x) = b - A y(x).
class DualOracle final : public FirstOrderOracle {
 public:
  explicit DualOracle(ConstrainedProgram program);

  struct Full {
    double value;
    Point gradient;
    Point y;
  };
  // Counts one gradient call.
  Full evaluate(const Point& x) const;
  Point inner(const Point& x) const { return program_.inner_solver(x); }
  const ConstrainedProgram& program() const { return program_; }

 protected:
  Evaluation do_eval(const Point& x) const override;

 private:
  Full compute(const Point& x) const;
  ConstrainedProgram program_;
};

std::shared_ptr<const DualOracle> dual_oracle(const ConstrainedProgram& program);

// (1/mu) max_{||y||_p <= 1} ||Ay||_2^2: max column norm squared for p = 1,
// lambda_max(A^T A) for p = 2.
double dual_smoothness(const ConstrainedProgram& program);

enum class DualMethod { Gradient, Accelerated };

struct DualSolveResult {
  Point x_bar;
  Point y_bar;
  int iterations = 0;
  bool converged = false;
  double L = 0.0;
  std::vector<double> gaps;           // f(x_bar) + phi(y_bar) per iteration
  std::vector<double> infeasibility;  // ||A y_bar - b|| per iteration
  Trace trace;                        // dual iterates x^k
};

// Gradient method with step 1/L on the dual from x^0 = 0. x_bar averages
// x^1..x^N, y_bar averages y(x^0)..y(x^{N-1}). Stops once
// f(x_bar) + phi(y_bar) <= eps and ||A y_bar - b|| <= eps_tilde. The
// accelerated variant runs similar triangles and averages y with weights alpha_k.
DualSolveResult dual_solve_restore(const ConstrainedProgram& program, double epsilon, double epsilon_tilde,
                                   int N_cap, DualMethod method = DualMethod::Gradient);

// max{2 L R^2 / eps, 2 L R / eps_tilde}.
double restoration_budget(double L, double R, double epsilon, double epsilon_tilde);

// phi(y) + mu V(y, center).
OraclePtr regularize(OraclePtr oracle, double mu_reg, const Point& center, const ProxSetup& prox);
// Largest admissible mu: eps / (2 V(y*, y0)).
double regularization_mu(double epsilon, double bregman_to_solution);

// Smallest positive eigenvalue of A A^T.
double smallest_positive_eigenvalue(const Matrix& A);
// ||grad phi(y*)||^2 / sigma_min^+(A); bound on ||x*||^2.
double dual_size_bound(const ConstrainedProgram& program, const Point& y_star);

// (1/gamma)(f0(x_bar) - min f0), gamma = min_i -h_i(x_bar). The minimum of f0
// is taken from the problem's known optimum.
double slater_dual_bound(const Problem& f0, const std::vector<OraclePtr>& h, const Point& x_bar);

}  // namespace fom
