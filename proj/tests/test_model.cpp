#include "fom/model/model_oracle.hpp"

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

OraclePtr half_sq(Index n, double L = 1.0) {
  return make_oracle(n, [L](const Point& x) { return 0.5 * L * x.squaredNorm(); },
                     [L](const Point& x) { return Point(L * x); });
}

OraclePtr scaled_norm(Index n, double L0) {
  return make_oracle(n, [L0](const Point& x) { return L0 * x.norm(); },
                     [L0, n](const Point& x) {
                       double r = x.norm();
                       return r > 0.0 ? Point(L0 * x / r) : Point(Point::Zero(n));
                     });
}

}  // namespace

TEST(LinearModel, QuadraticAtPoint) {
  auto m = linear_model(half_sq(2));
  Model q = m->query(vec({1, 0}));
  EXPECT_DOUBLE_EQ(q.f_delta, 0.5);
  EXPECT_LT((q.linear - vec({1, 0})).norm(), 1e-15);
  EXPECT_DOUBLE_EQ(q.psi(q.center), 0.0);
}

TEST(LinearModel, NormGradient) {
  const double L0 = 3.0;
  auto m = linear_model(scaled_norm(2, L0));
  Model q = m->query(vec({3, 4}));
  EXPECT_LT((q.linear - vec({0.6 * L0, 0.8 * L0})).norm(), 1e-14);
}

TEST(ModelCheck, ExactModelHasNoViolation) {
  auto m = linear_model(half_sq(3, 4.0));
  auto pairs = sample_pairs(Point::Zero(3), 5.0, 200, 1);
  EXPECT_LE(model_check(*m, 4.0, 0.0, pairs), 1e-12);
}

TEST(ModelCheck, UnderstatedLIsDetected) {
  auto m = linear_model(half_sq(1));
  SamplePairs pairs{{vec({0.0}), vec({2.0})}};
  EXPECT_GE(model_check(*m, 0.5, 0.0, pairs), 0.5);
}

TEST(ModelCheck, NonsmoothWithHolderConversion) {
  const double L0 = 2.0, delta = 0.1;
  auto m = linear_model(scaled_norm(3, L0));
  double L = holder_to_smooth_L(L0, 0.0, delta);
  auto pairs = sample_pairs(Point::Zero(3), 2.0, 500, 4);
  EXPECT_LE(model_check(*m, L, delta, pairs), 1e-12);
}

TEST(CompositeModel, PsiIncludesComposite) {
  auto m = composite_model(half_sq(2), CompositeTerm::l1(2.0));
  Model q = m->query(vec({1, -1}));
  // <(1,-1), y - x> + 2|y|_1 - 2|x|_1 at y = 0.
  EXPECT_NEAR(q.psi(vec({0, 0})), -2.0 - 4.0, 1e-14);
  EXPECT_NEAR(m->value(vec({1, -1})), 1.0 + 4.0, 1e-14);
}

TEST(CompositeModel, RejectsIncompatibleSetup) {
  EXPECT_THROW(composite_model(half_sq(2), CompositeTerm::l1(1.0), ProxSetup::pnorm(2, 1.5)), ConfigError);
}

TEST(InexactWrap, ZeroDeltaIsIdentity) {
  auto m = linear_model(half_sq(1));
  EXPECT_EQ(inexact_wrap(m, 0.0, 7).get(), m.get());
}

TEST(InexactWrap, SandwichHoldsAndIsDeterministic) {
  auto m = linear_model(half_sq(1));
  auto a = inexact_wrap(m, 1e-3, 9);
  auto b = inexact_wrap(m, 1e-3, 9);
  auto pairs = sample_pairs(Point::Zero(1), 3.0, 300, 2);
  EXPECT_LE(model_check(*a, 1.0, 1e-3, pairs), 1e-12);
  for (const auto& pr : pairs) EXPECT_EQ(a->query(pr.first).f_delta, b->query(pr.first).f_delta);
  EXPECT_DOUBLE_EQ(a->declared_delta(), 1e-3);
}

TEST(HolderToSmooth, Examples) {
  EXPECT_DOUBLE_EQ(holder_to_smooth_L(5.0, 1.0, 0.3), 5.0);
  EXPECT_DOUBLE_EQ(holder_to_smooth_L(1.0, 0.0, 0.5), 1.0);
  EXPECT_NEAR(holder_to_smooth_L(3.0, 0.0, 0.01), 9.0 / 0.02, 1e-9);
  EXPECT_THROW(holder_to_smooth_L(1.0, 0.0, 0.0), DomainError);
  EXPECT_THROW(holder_to_smooth_L(1.0, 1.5, 0.1), DomainError);
}
