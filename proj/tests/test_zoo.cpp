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

}  // namespace

TEST(WorstCaseSmooth, GradientAtOriginAndOptimum) {
  const double L = 2.0;
  auto z = worst_case_smooth(L, 5, 13);
  Point g = z.problem.oracle().eval(Point::Zero(13)).subgradient;
  Point expect = Point::Zero(13);
  expect[0] = -L / 4.0;
  EXPECT_LT((g - expect).norm(), 1e-15);
  const auto& opt = *z.problem.optimum();
  EXPECT_LT(z.problem.oracle().eval(opt.x).subgradient.norm(), 1e-14);
  EXPECT_NEAR(z.problem.oracle().value(opt.x), opt.f, 1e-14);
  EXPECT_EQ(declared_smoothness_violation(z, 100, 3.0, 1), 0.0);
}

TEST(WorstCaseSmooth, RejectsSmallDimension) {
  EXPECT_THROW(worst_case_smooth(1.0, 5, 10), DimensionError);
}

TEST(WorstCaseNonsmooth, OptimumAndAdversary) {
  auto z = worst_case_nonsmooth(1.0, 4, 1.0, 4);
  EXPECT_DOUBLE_EQ(z.problem.optimum()->f, -0.25);
  EXPECT_NEAR(z.problem.oracle().value(z.problem.optimum()->x), -0.25, 1e-15);
  reset_adversary(z);
  Point g0 = z.problem.oracle().eval(Point::Zero(4)).subgradient;
  EXPECT_EQ(g0, vec({1, 0, 0, 0}));
  // The next tie picks an index not returned before.
  Point g1 = z.problem.oracle().eval(Point::Zero(4)).subgradient;
  EXPECT_EQ(g1, vec({0, 1, 0, 0}));
  reset_adversary(z);
  EXPECT_EQ(z.problem.oracle().eval(Point::Zero(4)).subgradient, vec({1, 0, 0, 0}));
}

TEST(NesterovSkokov, ValuesAndGradientCheck) {
  auto z = nesterov_skokov(6);
  EXPECT_DOUBLE_EQ(z.problem.oracle().value(Point::Ones(6)), 0.0);
  ASSERT_TRUE(z.start.has_value());
  EXPECT_DOUBLE_EQ(z.problem.oracle().value(*z.start), 1.0);
  EXPECT_LT(finite_diff_check(z.problem.oracle(), *z.start, 1e-6), 1e-5);
  EXPECT_DOUBLE_EQ(z.info.at("L_box"), 66.5);
}

TEST(Huber, SeamAndPieces) {
  const double L = 2.0, R = 1.0, theta = 1.0;
  auto z = huber(L, R, theta, 2);
  const double s = R / (theta * theta);
  Point inside = vec({0.5 * s, 0.0});
  Point outside = vec({3.0 * s, 0.0});
  EXPECT_NEAR(z.problem.oracle().value(inside), 0.5 * L * inside.squaredNorm(), 1e-15);
  EXPECT_NEAR(z.problem.oracle().value(outside), L * R / (theta * theta) * 3.0 * s - L * R * R / 2.0, 1e-14);
  EXPECT_NEAR(z.problem.oracle().eval(outside).subgradient.norm(), L * R, 1e-14);
  EXPECT_LT(finite_diff_check(z.problem.oracle(), vec({0.3, -1.7}), 1e-6), 1e-6);
}

TEST(PowerNorm, HolderConstantAndOrigin) {
  auto z = power_norm(3, 0.5);
  EXPECT_NEAR(z.info.at("L_nu"), 1.5 * std::sqrt(2.0), 1e-14);
  EXPECT_EQ(z.problem.oracle().eval(Point::Zero(3)).subgradient, Point::Zero(3));
  EXPECT_THROW(power_norm(3, 1.5), DomainError);
}

TEST(RandomQuadratic, SpectrumEndsAndDeterminism) {
  auto a = random_quadratic(10, 0.5, 40.0, 42);
  auto b = random_quadratic(10, 0.5, 40.0, 42);
  Eigen::SelfAdjointEigenSolver<Matrix> es(*a.hessian);
  EXPECT_NEAR(es.eigenvalues().minCoeff(), 0.5, 1e-10);
  EXPECT_NEAR(es.eigenvalues().maxCoeff(), 40.0, 1e-10);
  EXPECT_EQ(*a.hessian, *b.hessian);
  EXPECT_EQ(*a.linear_term, *b.linear_term);
  const auto& opt = *a.problem.optimum();
  EXPECT_LT(a.problem.oracle().eval(opt.x).subgradient.norm(), 1e-10);
  auto c = random_quadratic(10, 0.5, 40.0, 43);
  EXPECT_NE(*a.hessian, *c.hessian);
}

TEST(QuadraticProblem, RejectsIndefinite) {
  Matrix A(2, 2);
  A << 1, 0, 0, -1;
  EXPECT_THROW(quadratic_problem(A, Point::Zero(2)), DomainError);
}

TEST(MatrixGame, PenniesAndZeroGame) {
  Matrix C(2, 2);
  C << 1, -1, -1, 1;
  auto g = matrix_game(C);
  EXPECT_NEAR(g.gap(vec({1, 0, 1, 0})), 2.0, 1e-15);
  EXPECT_NEAR(g.gap(vec({0.5, 0.5, 0.5, 0.5})), 0.0, 1e-15);
  EXPECT_DOUBLE_EQ(g.L, 1.0);
  auto zero = matrix_game(Matrix::Zero(2, 3));
  EXPECT_NEAR(zero.gap(zero.start()), 0.0, 1e-15);
  EXPECT_THROW(matrix_game(Matrix(0, 0)), DimensionError);
}

TEST(Consensus, LaplacianAndReference) {
  Matrix W = laplacian(3, path_graph(3));
  Eigen::SelfAdjointEigenSolver<Matrix> es(W);
  EXPECT_NEAR(es.eigenvalues()[0], 0.0, 1e-12);
  EXPECT_NEAR(es.eigenvalues()[1], 1.0, 1e-12);
  EXPECT_NEAR(es.eigenvalues()[2], 3.0, 1e-12);

  auto prog = consensus_problem(2, path_graph(2), Point::Ones(2), vec({1.0, 5.0}));
  ASSERT_TRUE(prog.reference.has_value());
  EXPECT_LT((prog.reference->y_star - vec({3.0, 3.0})).norm(), 1e-12);

  EXPECT_THROW(consensus_problem(3, {{0, 1}}, Point::Ones(3), Point::Zero(3)), DomainError);
}

TEST(EntropyProgram, ZeroConstraintsGiveUniform) {
  auto prog = entropy_linear(Matrix::Zero(1, 4), Point::Zero(1), 0.5);
  Point y = prog.inner_solver(vec({3.0}));
  EXPECT_LT((y - Point::Constant(4, 0.25)).norm(), 1e-15);
}

TEST(EntropyProgram, ReferenceIsFeasibleAndStationary) {
  auto prog = random_entropy_program(3, 7, 0.2, 11);
  ASSERT_TRUE(prog.reference.has_value());
  const auto& ref = *prog.reference;
  EXPECT_LT((prog.A * ref.y_star - prog.b).norm(), 1e-9);
  EXPECT_NEAR(ref.y_star.sum(), 1.0, 1e-12);
  EXPECT_LT((prog.inner_solver(ref.x_star) - ref.y_star).norm(), 1e-8);
}

TEST(Factory, FamiliesAndErrors) {
  for (const auto& f : zoo_families()) {
    std::map<std::string, double> p{{"n", 6}, {"N", 2}, {"L", 4}, {"L0", 1}, {"R", 1}, {"nu", 0.5}, {"mu", 1}};
    EXPECT_NO_THROW(make_zoo_problem(f, p)) << f;
  }
  EXPECT_THROW(make_zoo_problem("no_such_family", {}), ConfigError);
  EXPECT_THROW(make_zoo_problem("huber", {{"L", 1}, {"R", 1}}), ConfigError);
  EXPECT_THROW(make_zoo_problem("nesterov_skokov", {{"n", 2.5}}), ConfigError);
}
