#pragma once

#include "fom/core/norms.hpp"
#include "fom/core/oracle.hpp"
#include "fom/prox/prox_setup.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace fom {

// psi(y, center) = <linear, y - center> + c(y) - c(center).
struct Model {
  double f_delta = 0.0;  // estimate of the full objective at the center
  Point linear;
  CompositeTerm composite;
  Point center;

  double psi(const Point& y) const;
};

class ModelOracle {
 public:
  virtual ~ModelOracle() = default;

  virtual Model query(const Point& x) const = 0;
  // True objective (smooth part plus composite), for diagnostics.
  virtual double value(const Point& x) const = 0;
  virtual double declared_delta() const { return 0.0; }
  virtual const CompositeTerm& composite() const = 0;
  virtual const FirstOrderOracle& base() const = 0;

  Index dim() const { return base().dim(); }
  std::uint64_t grad_calls() const { return base().grad_calls(); }
  std::uint64_t value_calls() const { return base().value_calls(); }
};

using ModelPtr = std::shared_ptr<const ModelOracle>;

ModelPtr linear_model(OraclePtr oracle);
ModelPtr composite_model(OraclePtr F, CompositeTerm g);
// Same, failing early when g has no exact step for the intended setup.
ModelPtr composite_model(OraclePtr F, CompositeTerm g, const ProxSetup& setup);
// Shifts f_delta down by a seeded amount in [-delta/2, 0]; the linear part is
// left untouched, so the (delta, L) sandwich holds whenever (0, L) did.
ModelPtr inexact_wrap(ModelPtr oracle, double delta, std::uint64_t seed);

using SamplePairs = std::vector<std::pair<Point, Point>>;

// Largest violation of 0 <= f(y) - f_delta(x) - psi(y, x) <= L/2 ||y - x||^2 + delta.
double model_check(const ModelOracle& oracle, double L, double delta, const SamplePairs& samples,
                   const NormSpec& norm = NormSpec::euclidean());
// Uniform pairs in the Euclidean ball of the given radius.
SamplePairs sample_pairs(const Point& center, double radius, int count, std::uint64_t seed);

double holder_to_smooth_L(double L_nu, double nu, double delta);

}  // namespace fom
