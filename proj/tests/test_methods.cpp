#include "fom/methods/conjugate_gradient.hpp"
#include "fom/methods/frank_wolfe.hpp"
#include "fom/methods/gradient.hpp"
#include "fom/methods/momentum.hpp"
#include "fom/zoo/zoo.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace fom;

namespace {

Point vec(std::initializer_list<double> v) {
  Point p(static_cast<Index>(v.size()));
  Index i = 0;
  for (double x : v) p[i++] = x;
  return p;
}

Matrix diag(std::initializer_list<double> v) { return vec(v).asDiagonal(); }

ZooProblem diag_quadratic(std::initializer_list<double> d) {
  Matrix A = diag(d);
  return quadratic_problem(A, Point::Zero(A.rows()));
}

}  // namespace

TEST(GradientDescent, OneExactStep) {
  auto z = quadratic_problem(Matrix::Constant(1, 1, 3.0), Point::Zero(1));
  Trace t = gradient_descent(z.problem, vec({1.0}), StepRule::fixed_inverse_L(3.0), 1);
  EXPECT_NEAR(t.last()[0], 0.0, 1e-15);
}

TEST(GradientDescent, DiagonalQuadratic) {
  auto z = diag_quadratic({1, 10});
  Trace t = gradient_descent(z.problem, vec({1, 1}), StepRule::fixed_inverse_L(10.0), 1);
  EXPECT_LT((t.last() - vec({0.9, 0.0})).norm(), 1e-15);
  EXPECT_TRUE(t.consistent());
  EXPECT_EQ(t.grad_calls.back(), 2u);  // at x^0 and x^1
}

TEST(GradientDescent, DescentAndScaleInvariance) {
  auto z = random_quadratic(8, 0.5, 20.0, 3);
  Point x0 = *z.start;
  Trace t = gradient_descent(z.problem, x0, StepRule::fixed_inverse_L(20.0), 50);
  for (std::size_t k = 0; k + 1 < t.size(); ++k)
    EXPECT_LE(t.values[k + 1], t.values[k] - t.grad_norms[k] * t.grad_norms[k] / 40.0 + 1e-10);

  auto scaled = quadratic_problem(3.0 * *z.hessian, 3.0 * *z.linear_term);
  Trace s = gradient_descent(scaled.problem, x0, StepRule::fixed_inverse_L(60.0), 50);
  EXPECT_LT((s.last() - t.last()).norm(), 1e-12);
}

TEST(GradientDescent, ExactLineSearchOnQuadratic) {
  Matrix A = diag({1, 4});
  auto z = quadratic_problem(A, Point::Zero(2));
  Trace t = gradient_descent(z.problem, vec({1, 0}), StepRule::exact_quadratic(A), 1);
  EXPECT_LT(t.last().norm(), 1e-15);
}

TEST(GradientDescent, DivergesWithUnderstatedL) {
  auto z = diag_quadratic({1, 100});
  EXPECT_THROW(gradient_descent(z.problem, vec({1, 1}), StepRule::fixed_inverse_L(1.0), 5000),
               DivergenceError);
}

TEST(GradientDescent, ProjectsOntoSet) {
  auto o = make_oracle(2, [](const Point& x) { return 0.5 * (x - vec({2, -2})).squaredNorm(); },
                       [](const Point& x) { return Point(x - vec({2, -2})); });
  Problem p(o, FeasibleSet::box(vec({0, 0}), vec({1, 1})));
  Trace t = gradient_descent(p, vec({0.5, 0.5}), StepRule::fixed_inverse_L(1.0), 3);
  EXPECT_LT((t.last() - vec({1, 0})).norm(), 1e-15);
}

TEST(ModelGradient, MatchesGradientDescentBitForBit) {
  auto z = random_quadratic(6, 1.0, 10.0, 5);
  Point x0 = *z.start;
  Trace gd = gradient_descent(z.problem, x0, StepRule::fixed_inverse_L(10.0), 30);
  auto m = linear_model(z.problem.oracle_ptr());
  Trace mg = model_gradient_method(*m, ProxSetup::euclidean(FeasibleSet::free_space(6)), 10.0, x0, 30);
  ASSERT_EQ(gd.size(), mg.size());
  for (std::size_t k = 0; k < gd.size(); ++k) EXPECT_EQ(gd.iterates[k], mg.iterates[k]);
}

TEST(ModelGradient, EntropyStepIsMultiplicativeWeights) {
  Point c = vec({1.0, 0.0, 2.0});
  auto o = make_oracle(3, [c](const Point& x) { return c.dot(x); }, [c](const Point&) { return c; });
  auto m = linear_model(o);
  Trace t = model_gradient_method(*m, ProxSetup::entropy(3), 1.0, Point::Constant(3, 1.0 / 3.0), 1);
  Point w = (-c).array().exp();
  w /= w.sum();
  EXPECT_LT((t.last() - w).norm(), 1e-15);
}

TEST(HeavyBall, ZeroMomentumIsGradientDescent) {
  auto z = random_quadratic(5, 1.0, 8.0, 2);
  Trace hb = heavy_ball(z.problem, *z.start, 0.125, 0.0, 20);
  Trace gd = gradient_descent(z.problem, *z.start, StepRule::constant(0.125), 20);
  EXPECT_LT((hb.last() - gd.last()).norm(), 1e-14);
}

TEST(HeavyBall, HandComputedSteps) {
  auto z = quadratic_problem(Matrix::Identity(1, 1), Point::Zero(1));
  Trace t = heavy_ball(z.problem, vec({1.0}), 1.0, 0.5, 2);
  EXPECT_NEAR(t.iterates[1][0], 0.0, 1e-15);
  EXPECT_NEAR(t.iterates[2][0], -0.5, 1e-15);
}

TEST(HeavyBall, TunedParametersConvergeLinearly) {
  auto z = diag_quadratic({1, 100});
  const double a = 4.0 / std::pow(1.0 + 10.0, 2), b = std::pow(9.0 / 11.0, 2);
  Trace t = heavy_ball(z.problem, vec({1, 1}), a, b, 200);
  EXPECT_LT(t.last().norm(), 1e-10);
}

TEST(Nesterov, FirstStepIsGradientStep) {
  auto z = random_quadratic(4, 1.0, 5.0, 8);
  Trace n = nesterov_momentum(z.problem, *z.start, 5.0, std::nullopt, 1);
  Trace g = gradient_descent(z.problem, *z.start, StepRule::fixed_inverse_L(5.0), 1);
  EXPECT_LT((n.last() - g.last()).norm(), 1e-15);
}

TEST(Nesterov, MuEqualLIsGradientDescent) {
  auto z = random_quadratic(4, 1.0, 5.0, 8);
  Trace n = nesterov_momentum(z.problem, *z.start, 5.0, 5.0, 15);
  Trace g = gradient_descent(z.problem, *z.start, StepRule::fixed_inverse_L(5.0), 15);
  EXPECT_LT((n.last() - g.last()).norm(), 1e-14);
}

TEST(Nesterov, BeatsAcceleratedBoundOnWorstCase) {
  const int N = 20;
  auto z = worst_case_smooth(1.0, N, 2 * N + 1);
  Point x0 = Point::Zero(2 * N + 1);
  Trace t = nesterov_momentum(z.problem, x0, 1.0, std::nullopt, N);
  double R2 = z.problem.optimum()->x.squaredNorm();
  double gap = t.last_value() - z.problem.optimum()->f;
  EXPECT_LE(gap, 4.0 * R2 / ((N + 1.0) * (N + 1.0)));
  EXPECT_GE(gap, z.info.at("lower_bound") - 1e-15);
}

TEST(LinearCoupling, HandComputedStep) {
  // L = h = 1: tau = 1/2, x1 = 1, y1 = 0, z1 = 0.
  auto z = quadratic_problem(Matrix::Identity(1, 1), Point::Zero(1));
  Trace t = linear_coupling(z.problem, vec({1.0}), 1.0, 1.0, 1);
  EXPECT_NEAR(t.last()[0], 0.0, 1e-15);
}

TEST(LinearCoupling, ScheduleMeetsAcceleratedRate) {
  auto z = diag_quadratic({1, 10});
  Point x0 = vec({1, 1});
  const int N = 100;
  Trace t = linear_coupling_schedule(z.problem, x0, 10.0, N);
  EXPECT_LE(t.last_value(), 2.0 * 4.0 * 10.0 * x0.squaredNorm() / (N * N));
}

TEST(CgQuadratic, IdentityInOneStep) {
  Trace t = cg_quadratic(Matrix::Identity(3, 3), vec({1, 2, 3}), vec({-4, 0, 9}), 1);
  EXPECT_LT((t.last() - vec({1, 2, 3})).norm(), 1e-14);
}

TEST(CgQuadratic, FiniteTerminationAndOrthogonality) {
  Matrix A = diag({1, 2, 3});
  Point b = vec({1, 1, 1});
  Trace t = cg_quadratic(A, b, Point::Zero(3), 3);
  EXPECT_LE((A * t.last() - b).norm(), 1e-10 * b.norm());
  for (std::size_t k = 1; k < t.subgradients.size(); ++k)
    for (std::size_t j = 0; j < k; ++j) {
      const Point& gk = t.subgradients[k];
      const Point& gj = t.subgradients[j];
      if (gk.norm() < 1e-12) continue;
      EXPECT_LE(std::abs(gk.dot(gj)), 1e-8 * gk.norm() * gj.norm());
    }
}

TEST(NonlinearCg, MatchesLinearCgOnQuadratic) {
  auto z = random_quadratic(6, 1.0, 30.0, 4);
  Matrix A = *z.hessian;
  Point b = *z.linear_term;
  Trace lin = cg_quadratic(A, b, *z.start, 5);
  for (auto v : {CgVariant::FletcherReeves, CgVariant::PolakRibierePolyak}) {
    Trace nl = nonlinear_cg(z.problem, *z.start, v, 1000, 5, LineSearch::exact_quadratic(A));
    for (std::size_t k = 0; k < lin.size(); ++k) EXPECT_LT((nl.iterates[k] - lin.iterates[k]).norm(), 1e-8);
  }
  Trace bis = nonlinear_cg(z.problem, *z.start, CgVariant::FletcherReeves, 1000, 5, LineSearch::bisection(1e-13));
  EXPECT_LT((bis.last() - lin.last()).norm(), 1e-6);
}

TEST(NonlinearCg, RestartEveryStepIsSteepestDescent) {
  Matrix A = diag({1, 3, 7});
  auto z = quadratic_problem(A, vec({1, 1, 1}));
  Trace cg = nonlinear_cg(z.problem, vec({0, 0, 0}), CgVariant::PolakRibierePolyak, 1, 10,
                          LineSearch::exact_quadratic(A));
  Trace sd = gradient_descent(z.problem, vec({0, 0, 0}), StepRule::exact_quadratic(A), 10);
  EXPECT_LT((cg.last() - sd.last()).norm(), 1e-12);
}

TEST(FrankWolfe, StaysOnSimplexAndMeetsBound) {
  Trace t = frank_wolfe_simplex(Matrix::Identity(2, 2), vec({1, 0}), 200);
  for (const auto& x : t.iterates) {
    EXPECT_NEAR(x.sum(), 1.0, 1e-15);
    EXPECT_GE(x.minCoeff(), 0.0);
  }
  EXPECT_LE(t.last_value() - 0.25, frank_wolfe_bound(Matrix::Identity(2, 2), 200));
  EXPECT_LT((t.last() - vec({0.5, 0.5})).norm(), 0.05);
}

TEST(FrankWolfe, DegenerateSimplex) {
  Trace t = frank_wolfe_simplex(Matrix::Identity(1, 1), vec({1.0}), 10);
  for (const auto& x : t.iterates) EXPECT_EQ(x[0], 1.0);
}

TEST(FrankWolfe, RejectsNonVertexStart) {
  EXPECT_THROW(frank_wolfe_simplex(Matrix::Identity(2, 2), vec({0.5, 0.5}), 10), DomainError);
}

TEST(SubgradientDescent, AverageWithinBound) {
  auto z = norm_plus_quadratic(3, 1e-9);
  Point x0 = vec({1, 0, 0});
  const int N = 400;
  Trace t = subgradient_descent(z.problem, x0, 1.0, 1.0, N);
  double f_avg = z.problem.oracle().value(t.averaged_point);
  EXPECT_LE(f_avg, 1.0 / std::sqrt(N) + 1e-6);
}
