#include "fom/zoo/zoo.hpp"

#include "verify.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <random>

namespace fom {

namespace {

ZooProblem quadratic_zoo(const Matrix& A, const Point& b, const Point& xs, double mu, double L, std::string family) {
  const Index n = A.rows();
  const double fs = 0.5 * xs.dot(A * xs) - b.dot(xs);
  auto oracle = make_oracle(
      n, [A, b](const Point& x) { return 0.5 * x.dot(A * x) - b.dot(x); },
      [A, b](const Point& x) -> Point { return A * x - b; });
  ProblemConstants c;
  c.L1 = L;
  if (mu > 0.0) c.mu = mu;
  ZooProblem z{Problem(oracle, FeasibleSet::free_space(n), KnownOptimum{xs, fs}, c), std::move(family)};
  z.hessian = A;
  z.linear_term = b;
  z.reference_solver = [xs, fs] { return KnownOptimum{xs, fs}; };
  return z;
}

}  // namespace

ZooProblem random_quadratic(Index n, double mu, double L, std::uint64_t seed) {
  if (n < 1) throw DimensionError("random_quadratic: empty dimension");
  if (!(mu >= 0.0 && mu <= L) || !std::isfinite(L) || !(L > 0.0))
    throw ConfigError("random_quadratic: need 0 <= mu <= L, L > 0");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unif(mu, L);

  Matrix G(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) G(i, j) = normal(rng);
  Matrix Q = Eigen::HouseholderQR<Matrix>(G).householderQ();

  Point lambda(n);
  for (Index i = 0; i < n; ++i) lambda(i) = unif(rng);
  lambda(0) = mu;
  lambda(n - 1) = L;
  if (n == 1) lambda(0) = L;

  Matrix A = Q * lambda.asDiagonal() * Q.transpose();
  A = 0.5 * (A + A.transpose());
  Point xs(n);
  for (Index i = 0; i < n; ++i) xs(i) = normal(rng);
  const Point b = A * xs;

  ZooProblem z = quadratic_zoo(A, b, xs, n == 1 ? L : mu, L, "random_quadratic");
  z.params = {{"n", static_cast<double>(n)}, {"mu", mu}, {"L", L}, {"seed", static_cast<double>(seed)}};
  Point dir(n);
  for (Index i = 0; i < n; ++i) dir(i) = normal(rng);
  z.start = xs + dir / dir.norm();
  detail::verify_declared_smoothness(z, 3.0);
  return z;
}

ZooProblem quadratic_problem(Matrix A, Point b) {
  const Index n = A.rows();
  if (A.cols() != n || b.size() != n) throw DimensionError("quadratic_problem: shape mismatch");
  if (!A.isApprox(A.transpose(), 1e-12)) throw DomainError("quadratic_problem: matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Matrix> es(A);
  const double lo = es.eigenvalues().minCoeff(), hi = es.eigenvalues().maxCoeff();
  if (lo < -1e-12 * std::max(1.0, hi)) throw DomainError("quadratic_problem: matrix is not positive semidefinite");
  const Point xs = A.completeOrthogonalDecomposition().solve(b);
  if ((A * xs - b).norm() > 1e-8 * std::max(1.0, b.norm()))
    throw DomainError("quadratic_problem: unbounded below (b outside the range of A)");
  ZooProblem z = quadratic_zoo(A, b, xs, std::max(lo, 0.0), std::max(hi, 1e-300), "quadratic");
  z.params = {{"n", static_cast<double>(n)}};
  return z;
}

}  // namespace fom
