#include "fom/methods/gradient.hpp"
#include "fom/universal/restart.hpp"
#include "fom/universal/similar_triangles.hpp"
#include "fom/universal/universal_gradient.hpp"
#include "fom/zoo/zoo.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace fom;

namespace {

Geometry euclid(Index n) { return ProxSetup::euclidean(FeasibleSet::free_space(n)); }

OraclePtr half_sq(Index n, double L) {
  return make_oracle(n, [L](const Point& x) { return 0.5 * L * x.squaredNorm(); },
                     [L](const Point& x) { return Point(L * x); });
}

}  // namespace

TEST(Universal, SmoothCapAndConvergence) {
  const double L1 = 8.0;
  auto m = linear_model(half_sq(3, L1));
  UniversalOptions opt;
  opt.epsilon = 1e-6;
  opt.L0 = L1;
  opt.R = 2.0;
  Point x0 = Point::Constant(3, 1.0);
  Trace t = universal_gradient(*m, euclid(3), x0, opt);
  EXPECT_TRUE(t.converged);
  EXPECT_LE(t.certificates.back(), opt.epsilon);
  for (std::size_t k = 1; k < t.size(); ++k) EXPECT_LE(t.step_constants[k], 2.0 * L1);
  EXPECT_LE(t.last_value(), opt.epsilon);
}

TEST(Universal, NonsmoothCapAndQuadraticGrowth) {
  auto zoo = power_norm(2, 0.0);
  auto m = linear_model(zoo.problem.oracle_ptr());
  Point x0(2);
  x0 << 0.6, 0.8;
  auto run = [&](double eps) {
    UniversalOptions opt;
    opt.epsilon = eps;
    opt.R = 1.0;
    return universal_gradient(*m, euclid(2), x0, opt);
  };
  Trace a = run(0.02);
  Trace b = run(0.01);
  ASSERT_TRUE(a.converged);
  ASSERT_TRUE(b.converged);
  // Holder constant of the subgradient of ||x|| is 2.
  for (double L : b.step_constants) EXPECT_LE(L, 2.0 * 4.0 / 0.01);
  EXPECT_LE(a.iterations(), universal_iteration_bound(2.0, 0.0, 1.0, 0.02));
  EXPECT_LE(b.iterations(), 2.0 * universal_iteration_bound(2.0, 0.0, 1.0, 0.01));
}

TEST(Universal, WeightsAreInverseL) {
  auto m = linear_model(half_sq(2, 3.0));
  UniversalOptions opt;
  opt.epsilon = 1e-4;
  opt.R = 1.0;
  Trace t = universal_gradient(*m, euclid(2), Point::Ones(2), opt);
  for (std::size_t k = 1; k < t.size(); ++k) EXPECT_DOUBLE_EQ(t.weights[k], 1.0 / t.step_constants[k]);
}

TEST(Universal, BrokenOracleExhaustsBudget) {
  // Reported gradient has the wrong sign; acceptance needs L of order 12/eps.
  auto bad = make_oracle(1, [](const Point& x) { return x.squaredNorm(); },
                         [](const Point& x) { return Point(-2.0 * x); });
  auto m = linear_model(bad);
  UniversalOptions opt;
  opt.budget = 8;
  opt.max_iterations = 10;
  EXPECT_THROW(universal_gradient(*m, euclid(1), Point::Ones(1), opt), AdaptivityError);
}

TEST(Universal, RejectsBadOptions) {
  auto m = linear_model(half_sq(1, 1.0));
  UniversalOptions opt;
  opt.epsilon = 0.0;
  EXPECT_THROW(universal_gradient(*m, euclid(1), Point::Ones(1), opt), ConfigError);
}

TEST(SimilarTriangles, FirstStepIsMirrorStep) {
  const double L = 4.0;
  auto z = random_quadratic(4, 1.0, L, 6);
  auto m = linear_model(z.problem.oracle_ptr());
  Trace st = similar_triangles(*m, euclid(4), L, *z.start, 1);
  Trace gd = gradient_descent(z.problem, *z.start, StepRule::fixed_inverse_L(L), 1);
  EXPECT_LT((st.last() - gd.last()).norm(), 1e-14);
  EXPECT_NEAR(st.extras.at("A")[1], 1.0 / L, 1e-15);
}

TEST(SimilarTriangles, GrowthOfA) {
  auto m = linear_model(half_sq(2, 1.0));
  Trace t = similar_triangles(*m, euclid(2), 1.0, Point::Ones(2), 10);
  const auto& A = t.extras.at("A");
  const auto& alpha = t.extras.at("alpha");
  EXPECT_GE(A[10], 30.25);
  for (std::size_t k = 1; k < A.size(); ++k) {
    EXPECT_GE(A[k], (k + 1.0) * (k + 1.0) / 4.0 - 1e-12);
    EXPECT_NEAR(A[k], alpha[k] * alpha[k], 1e-10 * A[k]);
  }
}

TEST(SimilarTriangles, WorstCaseBetweenBounds) {
  const int N = 30;
  auto z = worst_case_smooth(1.0, N, 2 * N + 1);
  auto m = linear_model(z.problem.oracle_ptr());
  Point x0 = Point::Zero(2 * N + 1);
  Trace t = similar_triangles(*m, euclid(2 * N + 1), 1.0, x0, N);
  double gap = t.last_value() - z.problem.optimum()->f;
  double lower = z.info.at("lower_bound");
  EXPECT_GE(gap / lower, 1.0);
  EXPECT_LE(gap / lower, 43.0);
  EXPECT_LE(gap, similar_triangles_gap_bound(euclid(2 * N + 1), z.problem.optimum()->x, x0,
                                             t.extras.at("A").back()) + 1e-12);
}

TEST(SimilarTriangles, MonotoneVariantDecreases) {
  auto z = random_quadratic(10, 0.01, 10.0, 12);
  auto m = linear_model(z.problem.oracle_ptr());
  Trace t = similar_triangles(*m, euclid(10), 10.0, *z.start, 200, true);
  double worst = 0.0;
  std::size_t at = 0;
  for (std::size_t k = 0; k + 1 < t.size(); ++k)
    if (t.values[k + 1] - t.values[k] > worst) {
      worst = t.values[k + 1] - t.values[k];
      at = k;
    }
  EXPECT_LE(worst, 1e-14) << "largest increase at step " << at;
}

TEST(Restart, RadiiHalveAndGradientStagesConverge) {
  auto z = random_quadratic(6, 1.0, 20.0, 9);
  const Point x0 = *z.start;
  RestartOptions opt;
  opt.mu = 1.0;
  opt.epsilon = 1e-8;
  opt.R0 = (x0 - z.problem.optimum()->x).norm();
  Trace t = restart_strongly_convex(gradient_stage(z.problem, 20.0), opt, x0);
  const auto& radius = t.extras.at("radius");
  for (std::size_t k = 1; k + 1 < radius.size(); ++k) EXPECT_NEAR(radius[k], radius[k - 1] / 2.0, 1e-12 * radius[0]);
  EXPECT_LE(t.last_value() - z.problem.optimum()->f, opt.epsilon);
  const auto& per = t.extras.at("stage_iterations");
  ASSERT_GE(per.size(), 3u);
  EXPECT_LE(per[per.size() - 2], 2.0 * per[1] + 2.0);
}

TEST(Restart, SubgradientStagesWithinBudget) {
  const double mu = 1.0, L0 = 3.0, eps = 1e-3;
  auto z = norm_plus_quadratic(2, mu);
  Point x0(2);
  x0 << 0.6, 0.8;
  RestartOptions opt;
  opt.mu = mu;
  opt.epsilon = eps;
  opt.R0 = 1.0;
  Trace t = restart_strongly_convex(subgradient_stage(z.problem, L0), opt, x0);
  EXPECT_LE(t.last_value(), eps);
  EXPECT_LE(static_cast<double>(restart_total_iterations(t)), 512.0 * L0 * L0 / (mu * eps));
}

TEST(Restart, RequiresPositiveMu) {
  auto z = random_quadratic(2, 1.0, 2.0, 1);
  RestartOptions opt;
  EXPECT_THROW(restart_strongly_convex(gradient_stage(z.problem, 2.0), opt, *z.start), ConfigError);
  opt.mu = 1.0;
  EXPECT_THROW(restart_strongly_convex(StageSolver{}, opt, *z.start), ConfigError);
}

TEST(Restart, MuSearchHalves) {
  auto z = random_quadratic(4, 0.25, 4.0, 2);
  RestartOptions opt;
  opt.mu = 4.0;
  opt.epsilon = 1e-6;
  opt.R0 = (*z.start - z.problem.optimum()->x).norm();
  const double f_star = z.problem.optimum()->f;
  auto res = restart_mu_search(gradient_stage(z.problem, 4.0), opt, *z.start,
                               [&](const Trace& t) { return t.last_value() - f_star <= 1e-6; });
  EXPECT_GE(res.attempts, 1);
  EXPECT_LE(res.mu, 4.0);
  EXPECT_LE(res.trace.last_value() - f_star, 1e-6);
}
