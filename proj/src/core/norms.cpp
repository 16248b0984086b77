#include "fom/core/norms.hpp"

#include <cmath>
#include <limits>

namespace fom {

NormSpec NormSpec::lp(double p) {
  if (!(p >= 1.0)) throw DomainError("norm exponent must satisfy p >= 1");
  NormSpec s;
  s.p_ = p;
  return s;
}

NormSpec NormSpec::linf() { return lp(std::numeric_limits<double>::infinity()); }

double NormSpec::dual_exponent() const {
  if (p_ == 1.0) return std::numeric_limits<double>::infinity();
  if (std::isinf(p_)) return 1.0;
  return p_ / (p_ - 1.0);
}

double lp_norm(const Point& v, double p) {
  if (v.size() == 0) return 0.0;
  if (p == 1.0) return v.lpNorm<1>();
  if (p == 2.0) return v.norm();
  const double m = v.cwiseAbs().maxCoeff();
  if (std::isinf(p) || m == 0.0) return m;
  // Scaling by the max entry keeps |v_i|^p away from overflow.
  double s = 0.0;
  for (Index i = 0; i < v.size(); ++i) s += std::pow(std::abs(v[i]) / m, p);
  return m * std::pow(s, 1.0 / p);
}

double norm(const Point& v, const NormSpec& spec) { return lp_norm(v, spec.p()); }

double dual_norm(const Point& v, const NormSpec& spec) { return lp_norm(v, spec.dual_exponent()); }

}  // namespace fom
