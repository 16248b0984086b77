#include "fom/model/model_oracle.hpp"

#include <bit>
#include <cmath>
#include <random>

namespace fom {

double Model::psi(const Point& y) const {
  double v = linear.dot(y - center);
  if (!composite.is_none()) v += composite.value(y) - composite.value(center);
  return v;
}

namespace {

class CompositeModelOracle final : public ModelOracle {
 public:
  CompositeModelOracle(OraclePtr F, CompositeTerm g) : F_(std::move(F)), g_(std::move(g)) {
    if (!F_) throw ConfigError("model oracle requires a first-order oracle");
  }

  Model query(const Point& x) const override {
    Evaluation e = F_->eval(x);
    const double c = g_.is_none() ? 0.0 : g_.value(x);
    return Model{e.value + c, std::move(e.subgradient), g_, x};
  }

  double value(const Point& x) const override {
    return F_->value(x) + (g_.is_none() ? 0.0 : g_.value(x));
  }

  const CompositeTerm& composite() const override { return g_; }
  const FirstOrderOracle& base() const override { return *F_; }

 private:
  OraclePtr F_;
  CompositeTerm g_;
};

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic value in [0, 1) from the seed and the bit pattern of x.
double point_hash_unit(std::uint64_t seed, const Point& x) {
  std::uint64_t h = splitmix64(seed);
  for (Index i = 0; i < x.size(); ++i) h = splitmix64(h ^ std::bit_cast<std::uint64_t>(x[i]));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

class InexactModelOracle final : public ModelOracle {
 public:
  InexactModelOracle(ModelPtr inner, double delta, std::uint64_t seed)
      : inner_(std::move(inner)), delta_(delta), seed_(seed) {}

  Model query(const Point& x) const override {
    Model m = inner_->query(x);
    m.f_delta -= 0.5 * delta_ * point_hash_unit(seed_, x);
    return m;
  }

  double value(const Point& x) const override { return inner_->value(x); }
  double declared_delta() const override { return inner_->declared_delta() + delta_; }
  const CompositeTerm& composite() const override { return inner_->composite(); }
  const FirstOrderOracle& base() const override { return inner_->base(); }

 private:
  ModelPtr inner_;
  double delta_;
  std::uint64_t seed_;
};

}  // namespace

ModelPtr linear_model(OraclePtr oracle) {
  return std::make_shared<CompositeModelOracle>(std::move(oracle), CompositeTerm::none());
}

ModelPtr composite_model(OraclePtr F, CompositeTerm g) {
  return std::make_shared<CompositeModelOracle>(std::move(F), std::move(g));
}

ModelPtr composite_model(OraclePtr F, CompositeTerm g, const ProxSetup& setup) {
  if (!compatible(setup, g)) throw ConfigError("composite term has no exact step for this prox setup");
  return composite_model(std::move(F), std::move(g));
}

ModelPtr inexact_wrap(ModelPtr oracle, double delta, std::uint64_t seed) {
  if (!oracle) throw ConfigError("inexact_wrap requires an oracle");
  if (!(delta >= 0.0)) throw DomainError("delta must be nonnegative");
  if (delta == 0.0) return oracle;
  return std::make_shared<InexactModelOracle>(std::move(oracle), delta, seed);
}

double model_check(const ModelOracle& oracle, double L, double delta, const SamplePairs& samples,
                   const NormSpec& norm) {
  double worst = 0.0;
  for (const auto& [x, y] : samples) {
    const Model m = oracle.query(x);
    const double gap = oracle.value(y) - (m.f_delta + m.psi(y));
    const double r = fom::norm(y - x, norm);
    const double upper = 0.5 * L * r * r + delta;
    worst = std::max({worst, -gap, gap - upper});
  }
  return worst;
}

SamplePairs sample_pairs(const Point& center, double radius, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit;
  const Index n = center.size();
  auto draw = [&]() {
    Point d(n);
    for (Index i = 0; i < n; ++i) d[i] = normal(rng);
    const double r = radius * std::pow(unit(rng), 1.0 / static_cast<double>(n));
    return Point(center + r * d / d.norm());
  };
  SamplePairs out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Point x = draw();
    Point y = draw();
    out.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

double holder_to_smooth_L(double L_nu, double nu, double delta) {
  if (!(L_nu > 0.0)) throw DomainError("Holder constant must be positive");
  if (!(nu >= 0.0 && nu <= 1.0)) throw DomainError("Holder exponent must lie in [0, 1]");
  if (nu == 1.0) return L_nu;
  if (!(delta > 0.0)) throw DomainError("delta must be positive when nu < 1");
  const double base = (L_nu / (2.0 * delta)) * (1.0 - nu) / (1.0 + nu);
  return L_nu * std::pow(base, (1.0 - nu) / (1.0 + nu));
}

}  // namespace fom
