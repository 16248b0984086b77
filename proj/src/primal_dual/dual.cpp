#include "fom/primal_dual/dual.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>

namespace fom {

void ConstrainedProgram::validate() const {
  if (!phi) throw ConfigError("program needs phi");
  if (!inner_solver) throw ConfigError("program needs an inner solver");
  if (!(mu > 0.0)) throw DomainError("program requires mu > 0");
  if (p != 1 && p != 2) throw ConfigError("program norm must be p = 1 or p = 2");
  if (A.rows() == 0 || A.cols() == 0) throw DimensionError("constraint matrix is empty");
  require_dim(b, A.rows(), "constraint right-hand side");
  if (phi->dim() != A.cols()) throw DimensionError("phi dimension differs from the constraint matrix");
  if (set.dim() != A.cols()) throw DimensionError("feasible set dimension differs from the constraint matrix");
}

DualOracle::DualOracle(ConstrainedProgram program)
    : FirstOrderOracle(program.A.rows()), program_(std::move(program)) {
  program_.validate();
}

DualOracle::Full DualOracle::compute(const Point& x) const {
  Point y = program_.inner_solver(x);
  require_dim(y, program_.primal_dim(), "inner solver output");
  Point r = program_.b - program_.A * y;
  const double value = x.dot(r) - program_.phi->value(y);
  return {value, std::move(r), std::move(y)};
}

DualOracle::Full DualOracle::evaluate(const Point& x) const {
  Evaluation e = eval(x);  // counts the call
  Point y = program_.inner_solver(x);
  return {e.value, std::move(e.subgradient), std::move(y)};
}

Evaluation DualOracle::do_eval(const Point& x) const {
  Full f = compute(x);
  return {f.value, std::move(f.gradient)};
}

std::shared_ptr<const DualOracle> dual_oracle(const ConstrainedProgram& program) {
  return std::make_shared<DualOracle>(program);
}

double dual_smoothness(const ConstrainedProgram& program) {
  program.validate();
  if (program.p == 1) return program.A.colwise().squaredNorm().maxCoeff() / program.mu;
  Eigen::SelfAdjointEigenSolver<Matrix> es(program.A.transpose() * program.A, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff() / program.mu;
}

double restoration_budget(double L, double R, double epsilon, double epsilon_tilde) {
  return std::max(2.0 * L * R * R / epsilon, 2.0 * L * R / epsilon_tilde);
}

DualSolveResult dual_solve_restore(const ConstrainedProgram& program, double epsilon, double epsilon_tilde,
                                   int N_cap, DualMethod method) {
  if (!(epsilon > 0.0) || !(epsilon_tilde > 0.0)) throw ConfigError("restoration tolerances must be positive");
  if (N_cap < 1) throw ConfigError("iteration cap must be positive");
  const DualOracle oracle(program);
  const ConstrainedProgram& prog = oracle.program();
  const double L = dual_smoothness(prog);
  const Index m = prog.dual_dim(), n = prog.primal_dim();

  DualSolveResult out;
  out.L = L;
  Trace& t = out.trace;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  Point x = Point::Zero(m);  // the start x^0 = 0 is part of the guarantee
  Point x_sum = Point::Zero(m), y_sum = Point::Zero(n);
  // Accelerated state.
  Point u = x;
  double A_k = 0.0, alpha = 0.0;

  auto finish_step = [&](int N, const Point& x_bar, const Point& y_bar) {
    const double gap = oracle.value(x_bar) + prog.phi->value(y_bar);
    const double infeas = (prog.A * y_bar - prog.b).norm();
    out.gaps.push_back(gap);
    out.infeasibility.push_back(infeas);
    t.certificates.push_back(gap);
    out.x_bar = x_bar;
    out.y_bar = y_bar;
    out.iterations = N;
    if (!std::isfinite(gap) || !std::isfinite(infeas)) throw DivergenceError(N, "non-finite restoration gap");
    return gap <= epsilon && infeas <= epsilon_tilde;
  };

  t.push(x, nan, nan, nan, 0.0, 0, 0);
  t.certificates.push_back(nan);
  for (int N = 1; N <= N_cap; ++N) {
    bool done = false;
    if (method == DualMethod::Gradient) {
      DualOracle::Full e = oracle.evaluate(x);
      t.values.back() = e.value;
      t.grad_norms.back() = e.gradient.norm();
      y_sum += e.y;
      x -= e.gradient / L;
      x_sum += x;
      done = finish_step(N, x_sum / N, y_sum / N);
    } else {
      alpha = 0.5 / L + std::sqrt(0.25 / (L * L) + alpha * alpha);
      const double A_next = A_k + alpha;
      const Point y_pt = (alpha * u + A_k * x) / A_next;
      DualOracle::Full e = oracle.evaluate(y_pt);
      u -= alpha * e.gradient;
      x = (alpha * u + A_k * x) / A_next;
      A_k = A_next;
      y_sum += alpha * e.y;
      done = finish_step(N, x, y_sum / A_k);
    }
    if (!all_finite(x)) throw DivergenceError(N, "dual iterate became non-finite");
    t.push(x, nan, nan, L, 0.0, oracle.grad_calls(), oracle.value_calls());
    if (done) {
      out.converged = true;
      break;
    }
  }
  t.values.back() = oracle.value(x);
  t.converged = out.converged;
  t.set_uniform_weights(Averaging::FromOne);
  t.finalize_average();
  return out;
}

OraclePtr regularize(OraclePtr oracle, double mu_reg, const Point& center, const ProxSetup& prox) {
  if (!oracle) throw ConfigError("regularize needs an oracle");
  if (!(mu_reg > 0.0)) throw DomainError("regularization weight must be positive");
  require_dim(center, oracle->dim(), "regularization center");
  require_dim(center, prox.dim(), "regularization center");
  const Point grad_center = prox_gradient(prox, center);
  auto value = [oracle, mu_reg, center, prox](const Point& y) {
    return oracle->value(y) + mu_reg * bregman(prox, y, center);
  };
  auto grad = [oracle, mu_reg, grad_center, prox](const Point& y) {
    return Point(oracle->eval(y).subgradient + mu_reg * (prox_gradient(prox, y) - grad_center));
  };
  return make_oracle(oracle->dim(), value, grad);
}

double regularization_mu(double epsilon, double bregman_to_solution) {
  if (!(epsilon > 0.0) || !(bregman_to_solution > 0.0)) throw DomainError("regularization needs positive inputs");
  return epsilon / (2.0 * bregman_to_solution);
}

double smallest_positive_eigenvalue(const Matrix& A) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(A * A.transpose(), Eigen::EigenvaluesOnly);
  const Point& ev = es.eigenvalues();
  const double top = ev.maxCoeff();
  if (!(top > 0.0)) throw DomainError("degenerate constraints: A A^T has no positive eigenvalue");
  const double tol = 1e-10 * top;
  for (Index i = 0; i < ev.size(); ++i)
    if (ev[i] > tol) return ev[i];
  throw DomainError("degenerate constraints: A A^T has no positive eigenvalue");
}

double dual_size_bound(const ConstrainedProgram& program, const Point& y_star) {
  program.validate();
  const Point g = program.phi->eval(y_star).subgradient;
  return g.squaredNorm() / smallest_positive_eigenvalue(program.A);
}

double slater_dual_bound(const Problem& f0, const std::vector<OraclePtr>& h, const Point& x_bar) {
  if (!f0.optimum()) throw ConfigError("Slater bound needs the minimum of f0 over the set");
  if (h.empty()) throw ConfigError("Slater bound needs at least one constraint");
  double gamma = std::numeric_limits<double>::infinity();
  for (const auto& hi : h) gamma = std::min(gamma, -hi->value(x_bar));
  if (!(gamma > 0.0)) throw DomainError("Slater point must satisfy every constraint strictly");
  return (f0.oracle().value(x_bar) - f0.optimum()->f) / gamma;
}

}  // namespace fom
