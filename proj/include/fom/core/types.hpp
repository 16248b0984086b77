#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fom {

using Point = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

// Dimension disagreement is a programming error, hence logic_error.
class DimensionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class AdaptivityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(int step, const std::string& what)
      : std::runtime_error(what + " (step " + std::to_string(step) + ")"), step_(step) {}
  int step() const { return step_; }

 private:
  int step_;
};

inline bool all_finite(const Point& v) { return v.allFinite(); }

// Lowest index among the minimal entries.
inline Index first_argmin(const Point& v) {
  Index best = 0;
  for (Index i = 1; i < v.size(); ++i)
    if (v[i] < v[best]) best = i;
  return best;
}

inline void require_dim(const Point& v, Index n, const char* what) {
  if (v.size() != n) {
    throw DimensionError(std::string(what) + ": expected dimension " + std::to_string(n) +
                         ", got " + std::to_string(v.size()));
  }
}

inline void require_same_dim(const Point& a, const Point& b, const char* what) {
  require_dim(b, a.size(), what);
}

}  // namespace fom
