#include "fom/methods/frank_wolfe.hpp"

#include <limits>

namespace fom {

Trace frank_wolfe_simplex(const Matrix& A, const Point& x0, int N) {
  if (A.rows() != A.cols() || A.rows() == 0) throw DimensionError("Frank-Wolfe matrix must be square");
  require_dim(x0, A.rows(), "Frank-Wolfe start");
  if (N < 0) throw ConfigError("iteration count must be nonnegative");
  const bool is_vertex = (x0.array() == 0.0).count() == x0.size() - 1 && x0.maxCoeff() == 1.0;
  if (!is_vertex) throw DomainError("Frank-Wolfe start must be a simplex vertex");

  Trace t;
  Point x = x0;
  Point g = A * x;
  std::uint64_t matvecs = 1;
  double step_L = std::numeric_limits<double>::quiet_NaN();
  for (int k = 0;; ++k) {
    t.push(x, 0.5 * x.dot(g), g.lpNorm<Eigen::Infinity>(), step_L, 0.0, matvecs, 0);
    t.subgradients.push_back(g);
    if (k == N) break;
    const Index i = first_argmin(g);
    const double gamma = 2.0 / (k + 2.0);
    x *= (1.0 - gamma);
    x[i] += gamma;
    g = A * x;
    ++matvecs;
    step_L = 1.0 / gamma;
  }
  t.set_uniform_weights(Averaging::FromOne);
  t.finalize_average();
  return t;
}

double frank_wolfe_bound(const Matrix& A, int N) {
  return 2.0 * A.cwiseAbs().maxCoeff() * 4.0 / static_cast<double>(N);
}

}  // namespace fom
