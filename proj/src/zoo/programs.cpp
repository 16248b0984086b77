#include "fom/zoo/zoo.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <cmath>
#include <limits>
#include <queue>
#include <random>

namespace fom {

namespace {

Point softmax(const Point& z) {
  const double m = z.maxCoeff();
  Point e = (z.array() - m).exp();
  return e / e.sum();
}

double log_sum_exp(const Point& z) {
  const double m = z.maxCoeff();
  return m + std::log((z.array() - m).exp().sum());
}

// Smooth dual of the entropy program: <x, b> + mu lse(-A^T x / mu).
ProgramReference entropy_reference(const Matrix& A, const Point& b, double mu) {
  const Index m = A.rows();
  auto value = [&](const Point& x) { return x.dot(b) + mu * log_sum_exp(-(A.transpose() * x) / mu); };
  Point x = Point::Zero(m);
  double fx = value(x);
  for (int it = 0; it < 200; ++it) {
    const Point y = softmax(-(A.transpose() * x) / mu);
    const Point g = b - A * y;
    if (g.norm() <= 1e-14 * std::max(1.0, b.norm())) break;
    const Matrix S = Matrix(y.asDiagonal()) - y * y.transpose();
    const Matrix H = A * S * A.transpose() / mu;
    const Point d = -H.completeOrthogonalDecomposition().solve(g);
    double t = 1.0;
    double ft = value(x + d);
    while (ft > fx + 1e-4 * t * g.dot(d) && t > 1e-12) {
      t *= 0.5;
      ft = value(x + t * d);
    }
    if (!(ft <= fx)) break;
    x += t * d;
    fx = ft;
  }
  ProgramReference ref;
  ref.x_star = x;
  ref.y_star = softmax(-(A.transpose() * x) / mu);
  double phi = 0.0;
  for (Index i = 0; i < ref.y_star.size(); ++i)
    if (ref.y_star(i) > 0.0) phi += mu * ref.y_star(i) * std::log(ref.y_star(i));
  ref.phi_star = phi;
  return ref;
}

bool connected(int nodes, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nodes));
  for (auto [i, j] : edges) {
    adj[static_cast<std::size_t>(i)].push_back(j);
    adj[static_cast<std::size_t>(j)].push_back(i);
  }
  std::vector<bool> seen(static_cast<std::size_t>(nodes), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int count = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : adj[static_cast<std::size_t>(v)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        ++count;
        q.push(w);
      }
  }
  return count == nodes;
}

}  // namespace

ConstrainedProgram entropy_linear(Matrix A, Point b, double mu) {
  if (!(mu > 0.0)) throw DomainError("entropy_linear: mu must be positive");
  const Index n = A.cols();
  require_dim(b, A.rows(), "entropy_linear right-hand side");
  ConstrainedProgram p;
  p.phi = make_oracle(
      n,
      [mu](const Point& y) {
        double s = 0.0;
        for (Index i = 0; i < y.size(); ++i) {
          if (y(i) < 0.0) return std::numeric_limits<double>::infinity();
          if (y(i) > 0.0) s += y(i) * std::log(y(i));
        }
        return mu * s;
      },
      [mu](const Point& y) -> Point {
        return mu * (1.0 + y.array().max(kEntropyFloor).log()).matrix();
      });
  p.mu = mu;
  p.p = 1;
  p.A = A;
  p.b = b;
  p.set = FeasibleSet::simplex(n);
  p.inner_solver = [A, mu](const Point& x) { return softmax(-(A.transpose() * x) / mu); };
  p.reference = entropy_reference(A, b, mu);
  p.validate();
  return p;
}

ConstrainedProgram random_entropy_program(Index m, Index n, double mu, std::uint64_t seed) {
  if (m < 1 || n < 2) throw DimensionError("random_entropy_program: need m >= 1 and n >= 2");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Matrix A(m, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < m; ++i) A(i, j) = unif(rng);
  Point y(n);
  for (Index i = 0; i < n; ++i) y(i) = 0.5 + unif(rng);
  y /= y.sum();
  return entropy_linear(A, A * y, mu);
}

std::vector<std::pair<int, int>> path_graph(int nodes) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < nodes; ++i) e.emplace_back(i, i + 1);
  return e;
}

Matrix laplacian(int nodes, const std::vector<std::pair<int, int>>& edges) {
  if (nodes < 1) throw DimensionError("laplacian: empty graph");
  Matrix W = Matrix::Zero(nodes, nodes);
  for (auto [i, j] : edges) {
    if (i < 0 || j < 0 || i >= nodes || j >= nodes || i == j) throw DomainError("laplacian: invalid edge");
    W(i, i) += 1.0;
    W(j, j) += 1.0;
    W(i, j) -= 1.0;
    W(j, i) -= 1.0;
  }
  return W;
}

ConstrainedProgram consensus_problem(int nodes, const std::vector<std::pair<int, int>>& edges, Point a, Point c) {
  require_dim(a, nodes, "consensus curvatures");
  require_dim(c, nodes, "consensus centers");
  if (!(a.minCoeff() > 0.0)) throw DomainError("consensus: curvatures must be positive");
  const Matrix W = laplacian(nodes, edges);
  if (!connected(nodes, edges)) throw DomainError("consensus: graph is disconnected");

  ConstrainedProgram p;
  p.phi = make_oracle(
      nodes, [a, c](const Point& y) { return 0.5 * (a.array() * (y - c).array().square()).sum(); },
      [a, c](const Point& y) -> Point { return (a.array() * (y - c).array()).matrix(); });
  p.mu = a.minCoeff();
  p.p = 2;
  p.A = W;
  p.b = Point::Zero(nodes);
  p.set = FeasibleSet::free_space(nodes);
  p.inner_solver = [W, a, c](const Point& x) -> Point { return (c.array() - (W * x).array() / a.array()).matrix(); };

  const double t = a.dot(c) / a.sum();
  ProgramReference ref;
  ref.y_star = Point::Constant(nodes, t);
  ref.phi_star = 0.5 * (a.array() * (ref.y_star - c).array().square()).sum();
  const Point grad = (a.array() * (ref.y_star - c).array()).matrix();
  ref.x_star = -W.completeOrthogonalDecomposition().solve(grad);
  p.reference = ref;
  p.validate();
  return p;
}

ConstrainedProgram min_norm_program(Matrix A, Point b) {
  require_dim(b, A.rows(), "min_norm_program right-hand side");
  const Index n = A.cols();
  ConstrainedProgram p;
  p.phi = make_oracle(
      n, [](const Point& y) { return 0.5 * y.squaredNorm(); }, [](const Point& y) -> Point { return y; });
  p.mu = 1.0;
  p.p = 2;
  p.A = A;
  p.b = b;
  p.set = FeasibleSet::free_space(n);
  p.inner_solver = [A](const Point& x) -> Point { return -(A.transpose() * x); };
  ProgramReference ref;
  ref.y_star = A.completeOrthogonalDecomposition().solve(b);
  if ((A * ref.y_star - b).norm() > 1e-9 * std::max(1.0, b.norm()))
    throw DomainError("min_norm_program: b is outside the range of A");
  ref.phi_star = 0.5 * ref.y_star.squaredNorm();
  ref.x_star = -Matrix(A.transpose()).completeOrthogonalDecomposition().solve(ref.y_star);
  p.reference = ref;
  p.validate();
  return p;
}

}  // namespace fom
