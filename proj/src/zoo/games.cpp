#include "fom/zoo/zoo.hpp"

#include <random>

namespace fom {

double MatrixGame::gap(const Point& z) const {
  require_dim(z, m + n, "MatrixGame::gap");
  return saddle_gap(spec, z.head(m), z.tail(n));
}

MatrixGame matrix_game(Matrix C) {
  if (C.rows() < 1 || C.cols() < 1) throw DimensionError("matrix_game: empty payoff matrix");
  if (!C.allFinite()) throw DomainError("matrix_game: payoff matrix is not finite");
  MatrixGame g;
  g.m = C.rows();
  g.n = C.cols();
  g.C = C;
  const Index m = g.m, n = g.n;
  g.spec.Qu = FeasibleSet::simplex(m);
  g.spec.Qw = FeasibleSet::simplex(n);
  g.spec.f = [C](const Point& u, const Point& w) { return u.dot(C * w); };
  // Best responses are pure strategies.
  g.spec.max_over_w = [C](const Point& u) { return (C.transpose() * u).maxCoeff(); };
  g.spec.min_over_u = [C](const Point& w) { return (C * w).minCoeff(); };
  g.field = std::make_shared<VectorField>(m + n, [C, m, n](const Point& z) -> Point {
    Point out(m + n);
    out.head(m) = C * z.tail(n);
    out.tail(n) = -(C.transpose() * z.head(m));
    return out;
  });
  g.geometry = Geometry::product({ProxSetup::entropy(m), ProxSetup::entropy(n)});
  g.L = C.cwiseAbs().maxCoeff();
  return g;
}

MatrixGame random_matrix_game(Index m, Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  Matrix C(m, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < m; ++i) C(i, j) = unif(rng);
  return matrix_game(std::move(C));
}

}  // namespace fom
