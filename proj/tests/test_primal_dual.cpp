#include "fom/methods/gradient.hpp"
#include "fom/primal_dual/certificate.hpp"
#include "fom/primal_dual/dual.hpp"
#include "fom/zoo/zoo.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace fom;

namespace {

Point vec(std::initializer_list<double> v) {
  Point p(static_cast<Index>(v.size()));
  Index i = 0;
  for (double x : v) p[i++] = x;
  return p;
}

Matrix gaussian(Index m, Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  Matrix A(m, n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j) A(i, j) = nd(rng);
  return A;
}

Problem linear_on_unit_interval(double slope) {
  auto o = make_oracle(1, [slope](const Point& x) { return slope * x[0]; },
                       [slope](const Point&) { return vec({slope}); });
  KnownOptimum opt{vec({slope > 0 ? 0.0 : 1.0}), std::min(0.0, slope)};
  return Problem(o, FeasibleSet::box(vec({0}), vec({1})), opt);
}

}  // namespace

TEST(Certificate, HandComputedTangent) {
  auto z = quadratic_problem(Matrix::Identity(1, 1), Point::Zero(1));
  Trace t = gradient_descent(z.problem, vec({1.0}), StepRule::fixed_inverse_L(2.0), 1);
  Certificate c = certificate(t, z.problem.oracle(), FeasibleSet::box(vec({-2}), vec({2})));
  EXPECT_NEAR(c.gap_value, 3.0, 1e-14);
  EXPECT_DOUBLE_EQ(c.reference_ball_radius, 2.0);
}

TEST(Certificate, ZeroAtOptimum) {
  auto z = random_quadratic(4, 1.0, 5.0, 1);
  Trace t = gradient_descent(z.problem, z.problem.optimum()->x, StepRule::fixed_inverse_L(5.0), 3);
  Certificate c = certificate(t, z.problem.oracle(), FeasibleSet::ball(z.problem.optimum()->x, 1.0));
  EXPECT_LE(std::abs(c.gap_value), 1e-10);
}

TEST(Certificate, DominatesTrueGap) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    auto z = random_quadratic(5, 0.1, 10.0, seed);
    const auto& opt = *z.problem.optimum();
    Trace t = gradient_descent(z.problem, *z.start, StepRule::fixed_inverse_L(10.0), 20);
    auto ball = FeasibleSet::ball(*z.start, 2.0 * (*z.start - opt.x).norm());
    Certificate c = certificate(t, z.problem.oracle(), ball);
    Point x_bar = Point::Zero(5);
    for (int k = 0; k < 20; ++k) x_bar += t.iterates[k];
    x_bar /= 20.0;
    EXPECT_GE(c.gap_value, z.problem.oracle().value(x_bar) - opt.f - 1e-12) << "seed " << seed;
  }
}

TEST(Certificate, RejectsUnsupportedSet) {
  auto z = quadratic_problem(Matrix::Identity(1, 1), Point::Zero(1));
  Trace t = gradient_descent(z.problem, vec({1.0}), StepRule::fixed_inverse_L(1.0), 1);
  EXPECT_THROW(certificate(t, z.problem.oracle(), FeasibleSet::free_space(1)), ConfigError);
}

TEST(DualOracle, MinNormCompletesTheSquare) {
  auto prog = min_norm_program(Matrix::Identity(2, 2), Point::Zero(2));
  auto d = dual_oracle(prog);
  Point x = vec({1.5, -2.0});
  auto full = d->evaluate(x);
  EXPECT_NEAR(full.value, 0.5 * x.squaredNorm(), 1e-14);
  EXPECT_LT((full.gradient - x).norm(), 1e-14);
  EXPECT_LT((full.y + x).norm(), 1e-14);
}

TEST(DualOracle, SmoothnessConstants) {
  Matrix A = gaussian(3, 5, 4);
  auto prog = min_norm_program(A, A * Point::Ones(5));
  Eigen::SelfAdjointEigenSolver<Matrix> es(A.transpose() * A);
  EXPECT_NEAR(dual_smoothness(prog), es.eigenvalues().maxCoeff(), 1e-10);

  // Observed curvature along the top eigenvector of A A^T matches.
  auto d = dual_oracle(prog);
  Eigen::SelfAdjointEigenSolver<Matrix> top(A * A.transpose());
  Point v = top.eigenvectors().col(2);
  double curv = (d->eval(v).subgradient - d->eval(Point::Zero(3)).subgradient).dot(v);
  EXPECT_NEAR(curv, dual_smoothness(prog), 1e-9);

  auto ent = random_entropy_program(3, 6, 0.5, 2);
  double expect = 0.0;
  for (Index j = 0; j < ent.A.cols(); ++j) expect = std::max(expect, ent.A.col(j).squaredNorm());
  EXPECT_NEAR(dual_smoothness(ent), expect / 0.5, 1e-12);
}

TEST(DualSolveRestore, MinNormSolution) {
  Matrix A = gaussian(2, 4, 7);
  Point b = A * vec({1, -1, 0.5, 2});
  auto prog = min_norm_program(A, b);
  auto res = dual_solve_restore(prog, 1e-4, 1e-4, 1000000);
  ASSERT_TRUE(res.converged);
  EXPECT_LE((A * res.y_bar - b).norm(), 1e-4);
  Point y_min = A.transpose() * (A * A.transpose()).ldlt().solve(b);
  EXPECT_LT((res.y_bar - y_min).norm(), 1e-2);
}

TEST(DualSolveRestore, EntropyProgramWithinBudget) {
  auto prog = random_entropy_program(3, 8, 0.1, 5);
  ASSERT_TRUE(prog.reference.has_value());
  const double eps = 1e-3, eps_t = 1e-3;
  auto res = dual_solve_restore(prog, eps, eps_t, 1000000);
  ASSERT_TRUE(res.converged);
  EXPECT_LE((prog.A * res.y_bar - prog.b).norm(), eps_t);
  EXPECT_LE(prog.phi->value(res.y_bar) - prog.reference->phi_star, eps);
  double R = prog.reference->x_star.norm();
  EXPECT_LE(res.iterations, restoration_budget(res.L, R, eps, eps_t));
}

TEST(DualSolveRestore, ConsensusAgreesOnMean) {
  Point c = vec({1.0, 4.0, -2.0, 3.0});
  auto prog = consensus_problem(4, path_graph(4), Point::Ones(4), c);
  auto res = dual_solve_restore(prog, 1e-3, 1e-3, 1000000);
  ASSERT_TRUE(res.converged);
  for (Index i = 0; i < 4; ++i) EXPECT_NEAR(res.y_bar[i], c.mean(), 1e-2);
}

TEST(DualSolveRestore, AcceleratedVariantConverges) {
  auto prog = random_entropy_program(2, 5, 0.2, 9);
  auto res = dual_solve_restore(prog, 1e-3, 1e-3, 200000, DualMethod::Accelerated);
  EXPECT_TRUE(res.converged);
  EXPECT_LE((prog.A * res.y_bar - prog.b).norm(), 1e-3);
}

TEST(DualSolveRestore, RejectsBadTolerances) {
  auto prog = min_norm_program(Matrix::Identity(2, 2), Point::Zero(2));
  EXPECT_THROW(dual_solve_restore(prog, 0.0, 1e-3, 10), ConfigError);
  EXPECT_THROW(dual_solve_restore(prog, 1e-3, 1e-3, 0), ConfigError);
}

TEST(Regularize, VanishingWeightRecoversValues) {
  auto o = make_oracle(2, [](const Point& x) { return std::exp(x[0]) + x[1] * x[1]; },
                       [](const Point& x) { return vec({std::exp(x[0]), 2.0 * x[1]}); });
  auto prox = ProxSetup::euclidean(FeasibleSet::free_space(2));
  auto r = regularize(o, 1e-12, Point::Zero(2), prox);
  Point y = vec({0.4, -1.3});
  EXPECT_NEAR(r->value(y), o->value(y), 1e-11);
  EXPECT_THROW(regularize(o, 0.0, Point::Zero(2), prox), DomainError);
}

TEST(Regularize, PseudoinverseLimit) {
  Matrix A(2, 3);
  A << 1, 2, 0, 2, 4, 0;  // rank one
  Point b = vec({1, 3});
  auto ls = make_oracle(3, [A, b](const Point& x) { return 0.5 * (A * x - b).squaredNorm(); },
                        [A, b](const Point& x) { return Point(A.transpose() * (A * x - b)); });
  Point pinv = A.completeOrthogonalDecomposition().pseudoInverse() * b;
  double prev = std::numeric_limits<double>::infinity();
  for (double mu : {1e-1, 1e-2, 1e-3}) {
    auto r = regularize(ls, mu, Point::Zero(3), ProxSetup::euclidean(FeasibleSet::free_space(3)));
    Problem p(r, FeasibleSet::free_space(3));
    Trace t = gradient_descent(p, Point::Zero(3), StepRule::fixed_inverse_L(25.0 + mu), 2000);
    double err = (t.last() - pinv).norm();
    EXPECT_LT(err, prev);
    prev = err;
  }
  EXPECT_LT(prev, 1e-3);
}

TEST(Regularize, AdmissibleWeight) {
  EXPECT_DOUBLE_EQ(regularization_mu(0.1, 2.0), 0.025);
  EXPECT_THROW(regularization_mu(0.1, 0.0), DomainError);
}

TEST(DualSizeBound, Examples) {
  auto trivial = min_norm_program(Matrix::Identity(2, 2), Point::Zero(2));
  EXPECT_DOUBLE_EQ(dual_size_bound(trivial, Point::Zero(2)), 0.0);
  Matrix W = laplacian(3, path_graph(3));
  EXPECT_NEAR(smallest_positive_eigenvalue(W), 1.0, 1e-12);
  EXPECT_THROW(smallest_positive_eigenvalue(Matrix::Zero(2, 2)), DomainError);
}

TEST(DualSizeBound, DominatesDualSolutions) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Matrix A = gaussian(2, 4, seed);
    Point b = A * gaussian(4, 1, seed + 100).col(0);
    auto prog = min_norm_program(A, b);
    auto res = dual_solve_restore(prog, 1e-6, 1e-6, 200000);
    double bound = dual_size_bound(prog, res.y_bar);
    EXPECT_GE(bound * (1.0 + 1e-3), res.x_bar.squaredNorm()) << "seed " << seed;
  }
}

TEST(SlaterBound, Examples) {
  auto h = make_oracle(1, [](const Point& x) { return x[0] - 0.5; }, [](const Point&) { return vec({1.0}); });
  EXPECT_NEAR(slater_dual_bound(linear_on_unit_interval(1.0), {h}, vec({0.0})), 0.0, 1e-15);
  EXPECT_NEAR(slater_dual_bound(linear_on_unit_interval(-1.0), {h}, vec({0.0})), 2.0, 1e-15);
  auto very_negative = make_oracle(1, [](const Point&) { return -1e6; }, [](const Point&) { return vec({0.0}); });
  EXPECT_LT(slater_dual_bound(linear_on_unit_interval(-1.0), {very_negative}, vec({0.0})), 1e-5);
  EXPECT_THROW(slater_dual_bound(linear_on_unit_interval(1.0), {h}, vec({0.5})), DomainError);
}
