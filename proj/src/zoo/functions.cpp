#include "fom/zoo/zoo.hpp"

#include "fom/model/model_oracle.hpp"
#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

namespace fom {

double ZooProblem::info_or(const std::string& key, double fallback) const {
  auto it = info.find(key);
  return it == info.end() ? fallback : it->second;
}

namespace {

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw ConfigError(std::string(what) + " must be positive and finite");
}

class AdversarialMaxOracle final : public FirstOrderOracle {
 public:
  AdversarialMaxOracle(Index n, int N, double L0, double mu)
      : FirstOrderOracle(n), N_(N), L0_(L0), mu_(mu), touched_(static_cast<std::size_t>(N), false) {}

  void reset() const {
    std::lock_guard<std::mutex> lock(mutex_);
    std::fill(touched_.begin(), touched_.end(), false);
  }

 protected:
  Evaluation do_eval(const Point& x) const override {
    const double m = x.head(N_).maxCoeff();
    int chosen = -1;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      for (int i = 0; i < N_; ++i) {
        if (x(i) == m && !touched_[static_cast<std::size_t>(i)]) {
          chosen = i;
          break;
        }
      }
      if (chosen < 0) {
        for (int i = 0; i < N_; ++i)
          if (x(i) == m) {
            chosen = i;
            break;
          }
      }
      touched_[static_cast<std::size_t>(chosen)] = true;
    }
    Point g = mu_ * x;
    g(chosen) += L0_;
    return {do_value(x), g};
  }
  double do_value(const Point& x) const override {
    return L0_ * x.head(N_).maxCoeff() + 0.5 * mu_ * x.squaredNorm();
  }

 private:
  int N_;
  double L0_, mu_;
  mutable std::mutex mutex_;
  mutable std::vector<bool> touched_;
};

}  // namespace

ZooProblem worst_case_smooth(double L, int N, Index n) {
  require_positive(L, "L");
  if (N < 1) throw ConfigError("worst_case_smooth: N must be at least 1");
  const Index m = 2 * static_cast<Index>(N) + 1;
  if (n < m) throw DimensionError("worst_case_smooth: dimension must be at least 2N+1");

  Matrix A = Matrix::Zero(n, n);
  for (Index i = 0; i < m; ++i) {
    A(i, i) = 2.0;
    if (i + 1 < m) A(i, i + 1) = A(i + 1, i) = -1.0;
  }
  A *= L / 4.0;
  Point b = Point::Zero(n);
  b(0) = L / 4.0;

  Point xs = Point::Zero(n);
  for (Index i = 0; i < m; ++i) xs(i) = 1.0 - static_cast<double>(i + 1) / static_cast<double>(m + 1);
  const double fs = -0.5 * b.dot(xs);

  auto oracle = make_oracle(
      n, [A, b](const Point& x) { return 0.5 * x.dot(A * x) - b.dot(x); },
      [A, b](const Point& x) -> Point { return A * x - b; });
  const double R = xs.norm();
  ProblemConstants c;
  c.L1 = L;
  c.R = R;
  ZooProblem z{Problem(oracle, FeasibleSet::free_space(n), KnownOptimum{xs, fs}, c), "worst_case_smooth"};
  z.params = {{"L", L}, {"N", N}, {"n", static_cast<double>(n)}};
  z.info["lower_bound"] = 3.0 * L * R * R / (32.0 * (N + 1.0) * (N + 1.0));
  z.start = Point::Zero(n);
  z.hessian = A;
  z.linear_term = b;
  z.reference_solver = [xs, fs] { return KnownOptimum{xs, fs}; };
  detail::verify_declared_smoothness(z, 2.0 * R + 1.0);
  return z;
}

ZooProblem worst_case_nonsmooth(double L0, int N, double R, Index n) {
  require_positive(L0, "L0");
  require_positive(R, "R");
  if (N < 1) throw ConfigError("worst_case_nonsmooth: N must be at least 1");
  if (n < N) throw DimensionError("worst_case_nonsmooth: dimension must be at least N");
  const double sN = std::sqrt(static_cast<double>(N));
  const double mu = L0 / (R * sN);
  auto oracle = std::make_shared<AdversarialMaxOracle>(n, N, L0, mu);

  Point xs = Point::Zero(n);
  xs.head(N).setConstant(-R / sN);
  const double fs = -L0 * R / (2.0 * sN);
  ProblemConstants c;
  c.L0 = L0;
  c.R = R;
  c.mu = mu;
  ZooProblem z{Problem(oracle, FeasibleSet::free_space(n), KnownOptimum{xs, fs}, c), "worst_case_nonsmooth"};
  z.params = {{"L0", L0}, {"N", N}, {"R", R}, {"n", static_cast<double>(n)}};
  z.info["lower_bound"] = L0 * R / (2.0 * sN);
  z.info["mu"] = mu;
  z.start = Point::Zero(n);
  z.reference_solver = [xs, fs] { return KnownOptimum{xs, fs}; };
  return z;
}

void reset_adversary(const ZooProblem& zoo) {
  auto p = std::dynamic_pointer_cast<const AdversarialMaxOracle>(zoo.problem.oracle_ptr());
  if (!p) throw ConfigError("reset_adversary: not an adversarial oracle");
  p->reset();
}

ZooProblem nesterov_skokov(Index n) {
  if (n < 2) throw DimensionError("nesterov_skokov: dimension must be at least 2");
  auto f = [](const Point& x) {
    double s = 0.25 * (x(0) - 1.0) * (x(0) - 1.0);
    for (Index i = 0; i + 1 < x.size(); ++i) {
      const double r = x(i + 1) - 2.0 * x(i) * x(i) + 1.0;
      s += r * r;
    }
    return s;
  };
  auto g = [](const Point& x) -> Point {
    Point d = Point::Zero(x.size());
    d(0) = 0.5 * (x(0) - 1.0);
    for (Index i = 0; i + 1 < x.size(); ++i) {
      const double r = x(i + 1) - 2.0 * x(i) * x(i) + 1.0;
      d(i + 1) += 2.0 * r;
      d(i) -= 8.0 * r * x(i);
    }
    return d;
  };
  auto oracle = make_oracle(n, f, g);
  ZooProblem z{Problem(oracle, FeasibleSet::free_space(n), KnownOptimum{Point::Ones(n), 0.0}),
               "nesterov_skokov"};
  z.params = {{"n", static_cast<double>(n)}};
  // 1/2 + 2 ||J||^2 + 8 max|r_i| with ||J|| <= 5 and |r_i| <= 2 on the box.
  z.info["L_box"] = 66.5;
  Point x0 = Point::Ones(n);
  x0(0) = -1.0;
  z.start = x0;
  z.reference_solver = [n] { return KnownOptimum{Point::Ones(n), 0.0}; };
  return z;
}

ZooProblem huber(double L, double R, double theta, Index n) {
  require_positive(L, "L");
  require_positive(R, "R");
  require_positive(theta, "theta");
  const double s = R / (theta * theta);
  const double shift = L * R * R / (2.0 * std::pow(theta, 4));
  auto f = [L, s, shift](const Point& x) {
    const double r = x.norm();
    return r < s ? 0.5 * L * r * r : L * s * r - shift;
  };
  auto g = [L, s](const Point& x) -> Point {
    const double r = x.norm();
    return r < s ? Point(L * x) : Point(L * s / r * x);
  };
  const double inside = 0.5 * L * s * s, outside = L * s * s - shift;
  if (std::abs(inside - outside) > 1e-12 * std::max(1.0, std::abs(inside)))
    throw NumericalError("huber: pieces do not meet at the seam");

  ProblemConstants c;
  c.L1 = L;
  c.L0 = L * s;
  ZooProblem z{Problem(make_oracle(n, f, g), FeasibleSet::free_space(n), KnownOptimum{Point::Zero(n), 0.0}, c),
               "huber"};
  z.params = {{"L", L}, {"R", R}, {"theta", theta}, {"n", static_cast<double>(n)}};
  z.info["seam_radius"] = s;
  z.start = Point::Constant(n, 2.0 * s / std::sqrt(static_cast<double>(n)));
  z.reference_solver = [n] { return KnownOptimum{Point::Zero(n), 0.0}; };
  detail::verify_declared_smoothness(z, 2.0 * s);
  return z;
}

ZooProblem power_norm(Index n, double nu) {
  if (!(nu >= 0.0 && nu <= 1.0)) throw DomainError("power_norm: nu must lie in [0, 1]");
  if (n < 1) throw DimensionError("power_norm: empty dimension");
  auto f = [nu](const Point& x) { return std::pow(x.norm(), 1.0 + nu); };
  auto g = [nu](const Point& x) -> Point {
    const double r = x.norm();
    if (r == 0.0) return Point::Zero(x.size());
    return (1.0 + nu) * std::pow(r, nu - 1.0) * x;
  };
  ProblemConstants c;
  if (nu == 0.0) c.L0 = 1.0;
  if (nu == 1.0) c.L1 = 2.0;
  ZooProblem z{Problem(make_oracle(n, f, g), FeasibleSet::free_space(n), KnownOptimum{Point::Zero(n), 0.0}, c),
               "power_norm"};
  z.params = {{"n", static_cast<double>(n)}, {"nu", nu}};
  z.info["nu"] = nu;
  z.info["L_nu"] = (1.0 + nu) * std::pow(2.0, 1.0 - nu);
  z.reference_solver = [n] { return KnownOptimum{Point::Zero(n), 0.0}; };
  if (c.L1) detail::verify_declared_smoothness(z, 1.0);
  return z;
}

ZooProblem norm_plus_quadratic(Index n, double mu) {
  require_positive(mu, "mu");
  auto f = [mu](const Point& x) { return x.norm() + 0.5 * mu * x.squaredNorm(); };
  auto g = [mu](const Point& x) -> Point {
    const double r = x.norm();
    return r == 0.0 ? Point(mu * x) : Point(x / r + mu * x);
  };
  ProblemConstants c;
  c.mu = mu;
  ZooProblem z{Problem(make_oracle(n, f, g), FeasibleSet::free_space(n), KnownOptimum{Point::Zero(n), 0.0}, c),
               "norm_plus_quadratic"};
  z.params = {{"n", static_cast<double>(n)}, {"mu", mu}};
  z.reference_solver = [n] { return KnownOptimum{Point::Zero(n), 0.0}; };
  return z;
}

double declared_smoothness_violation(const ZooProblem& zoo, int pairs, double radius, std::uint64_t seed) {
  const auto& c = zoo.problem.constants();
  if (!c.L1) throw ConfigError("declared_smoothness_violation: no declared L1");
  const Problem& p = zoo.problem;
  Point center = p.optimum() ? p.optimum()->x : Point::Zero(p.dim());
  auto model = linear_model(p.oracle_ptr());
  return model_check(*model, *c.L1, 0.0, sample_pairs(center, radius, pairs, seed));
}

namespace detail {

void verify_declared_smoothness(const ZooProblem& zoo, double radius) {
  const double L = *zoo.problem.constants().L1;
  const double v = declared_smoothness_violation(zoo, 32, radius, 0x5eedULL);
  if (v > 1e-9 * (1.0 + L * radius * radius))
    throw NumericalError(zoo.family + ": declared L1 violated by sampling (" + std::to_string(v) + ")");
}

}  // namespace detail

namespace {

double param(const std::map<std::string, double>& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw ConfigError("missing problem parameter '" + key + "'");
  return it->second;
}

double param_or(const std::map<std::string, double>& p, const std::string& key, double fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

Index dim_param(const std::map<std::string, double>& p, const std::string& key) {
  const double v = param(p, key);
  if (v < 1.0 || v != std::floor(v)) throw ConfigError("parameter '" + key + "' must be a positive integer");
  return static_cast<Index>(v);
}

}  // namespace

std::vector<std::string> zoo_families() {
  return {"worst_case_smooth", "worst_case_nonsmooth", "nesterov_skokov", "huber",
          "power_norm",        "norm_plus_quadratic",  "random_quadratic"};
}

ZooProblem make_zoo_problem(const std::string& family, const std::map<std::string, double>& p) {
  if (family == "worst_case_smooth") {
    const int N = static_cast<int>(dim_param(p, "N"));
    return worst_case_smooth(param(p, "L"), N, static_cast<Index>(param_or(p, "n", 2.0 * N + 1)));
  }
  if (family == "worst_case_nonsmooth") {
    const int N = static_cast<int>(dim_param(p, "N"));
    return worst_case_nonsmooth(param(p, "L0"), N, param(p, "R"), static_cast<Index>(param_or(p, "n", N)));
  }
  if (family == "nesterov_skokov") return nesterov_skokov(dim_param(p, "n"));
  if (family == "huber")
    return huber(param(p, "L"), param(p, "R"), param_or(p, "theta", 1.0), dim_param(p, "n"));
  if (family == "power_norm") return power_norm(dim_param(p, "n"), param(p, "nu"));
  if (family == "norm_plus_quadratic") return norm_plus_quadratic(dim_param(p, "n"), param(p, "mu"));
  if (family == "random_quadratic")
    return random_quadratic(dim_param(p, "n"), param(p, "mu"), param(p, "L"),
                            static_cast<std::uint64_t>(param_or(p, "seed", 0.0)));
  throw ConfigError("unknown problem family '" + family + "'");
}

}  // namespace fom
