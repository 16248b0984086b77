#include "fom/vi/mirror_prox.hpp"
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

// f(u, w) = u w on [-1, 1]^2.
SaddleSpec bilinear_spec() {
  SaddleSpec s;
  s.Qu = FeasibleSet::box(vec({-1}), vec({1}));
  s.Qw = FeasibleSet::box(vec({-1}), vec({1}));
  s.f = [](const Point& u, const Point& w) { return u[0] * w[0]; };
  s.max_over_w = [](const Point& u) { return std::abs(u[0]); };
  s.min_over_u = [](const Point& w) { return -std::abs(w[0]); };
  return s;
}

Point random_simplex(Index n, std::mt19937_64& rng) {
  std::exponential_distribution<double> e(1.0);
  Point p(n);
  for (Index i = 0; i < n; ++i) p[i] = e(rng);
  return p / p.sum();
}

}  // namespace

TEST(MirrorProx, NullFieldKeepsStart) {
  VectorField zero(2, [](const Point& x) { return Point(Point::Zero(x.size())); });
  Geometry g = ProxSetup::euclidean(FeasibleSet::ball(Point::Zero(2), 1.0));
  Point x0 = vec({0.3, -0.2});
  Trace t = mirror_prox(zero, g, 1.0, x0, 10);
  for (const auto& y : t.iterates) EXPECT_EQ(y, x0);
}

TEST(MirrorProx, BilinearSaddleRate) {
  VectorField field(2, [](const Point& z) { return vec({z[1], -z[0]}); });
  Geometry g = ProxSetup::euclidean(FeasibleSet::box(vec({-1, -1}), vec({1, 1})));
  Point x0 = vec({0.8, -0.5});
  const int N = 400;
  Trace t = mirror_prox(field, g, 1.0, x0, N);
  auto spec = bilinear_spec();
  const Point& y = t.averaged_point;
  double gap = saddle_gap(spec, y.head(1), y.tail(1));
  double R2 = g.max_radius(x0);
  EXPECT_LE(gap, 2.0 * R2 / N);
  EXPECT_LE(gap, vi_weighted_gap(t, g) + 1e-9);
}

TEST(MirrorProx, ExtragradientConvergesWherePlainStepCycles) {
  VectorField field(2, [](const Point& z) { return vec({z[1], -z[0]}); });
  Geometry g = ProxSetup::euclidean(FeasibleSet::ball(Point::Zero(2), 1.0));
  Point x0 = vec({0.5, 0.0});
  Trace t = mirror_prox(field, g, 2.0, x0, 200);
  EXPECT_LT(t.last().norm(), 1e-6);

  Point x = x0;
  for (int k = 0; k < 200; ++k) x = g.step(x, field.eval(x), 0.5);
  EXPECT_GT(x.norm(), 0.5);
}

TEST(MirrorProx, ResidualCertificateOnRandomGame) {
  auto game = random_matrix_game(3, 4, 17);
  const int N = 300;
  Point x0 = game.start();
  Trace t = mirror_prox(*game.field, game.geometry, game.L, x0, N);
  std::mt19937_64 rng(5);
  for (int s = 0; s < 200; ++s) {
    Point x(7);
    x << random_simplex(3, rng), random_simplex(4, rng);
    EXPECT_LE(vi_residual(t, x), game.L * game.geometry.bregman(x, x0) / N + 1e-9);
    // <g(x), y_bar - x> <= weighted gap for monotone fields.
    EXPECT_LE(game.field->eval(x).dot(t.averaged_point - x), vi_weighted_gap(t, game.geometry) + 1e-9);
  }
  EXPECT_LE(game.gap(t.averaged_point), vi_weighted_gap(t, game.geometry) + 1e-9);
}

TEST(MirrorProx, GapShrinksAlongRun) {
  auto game = random_matrix_game(3, 3, 23);
  double prev = game.gap(game.start());
  for (int N : {10, 100, 1000}) {
    Trace t = mirror_prox(*game.field, game.geometry, game.L, game.start(), N);
    double gap = game.gap(t.averaged_point);
    EXPECT_LE(gap, prev + 1e-12);
    prev = gap;
  }
}

TEST(UniversalMirrorProx, MatrixGameReachesEpsilon) {
  auto game = random_matrix_game(4, 5, 31);
  MirrorProxOptions opt;
  opt.epsilon = 1e-2;
  Trace t = universal_mirror_prox(*game.field, game.geometry, game.start(), opt);
  EXPECT_TRUE(t.converged);
  EXPECT_LE(game.gap(t.averaged_point), opt.epsilon + 1e-12);
  for (std::size_t k = 1; k < t.size(); ++k) EXPECT_LE(t.step_constants[k], 2.0 * game.L);
  double R2 = game.geometry.max_radius(game.start());
  EXPECT_LE(t.iterations(), 2.0 * std::pow(2.0 * game.L * std::sqrt(R2) / opt.epsilon, 2.0));
}

TEST(UniversalMirrorProx, RejectsBadOptions) {
  auto game = matrix_game(Matrix::Identity(2, 2));
  MirrorProxOptions opt;
  opt.epsilon = -1.0;
  EXPECT_THROW(universal_mirror_prox(*game.field, game.geometry, game.start(), opt), ConfigError);
}

TEST(SaddleGap, Examples) {
  Matrix C(2, 2);
  C << 0, 1, 1, 0;
  auto game = matrix_game(C);
  EXPECT_NEAR(saddle_gap(game.spec, vec({0.5, 0.5}), vec({0.5, 0.5})), 0.0, 1e-15);
  Matrix D(2, 2);
  D << 1, 0, 0, 0;
  auto g2 = matrix_game(D);
  EXPECT_NEAR(saddle_gap(g2.spec, vec({1, 0}), vec({0, 1})), 1.0, 1e-15);
  SaddleSpec bare;
  EXPECT_THROW(saddle_gap(bare, vec({0}), vec({0})), ConfigError);
}

TEST(Field, MonotonicityOfGameField) {
  auto game = random_matrix_game(3, 3, 2);
  std::mt19937_64 rng(1);
  std::vector<std::pair<Point, Point>> pairs;
  for (int s = 0; s < 50; ++s) {
    Point a(6), b(6);
    a << random_simplex(3, rng), random_simplex(3, rng);
    b << random_simplex(3, rng), random_simplex(3, rng);
    pairs.emplace_back(a, b);
  }
  EXPECT_LE(monotonicity_violation(*game.field, pairs), 1e-10);
  VectorField anti(1, [](const Point& x) { return Point(-x); });
  EXPECT_GT(monotonicity_violation(anti, {{vec({0}), vec({1})}}), 0.5);
}
