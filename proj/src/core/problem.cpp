#include "fom/core/problem.hpp"

#include <cmath>

namespace fom {

Problem::Problem(OraclePtr oracle, FeasibleSet set, std::optional<KnownOptimum> optimum,
                 ProblemConstants constants)
    : oracle_(std::move(oracle)), set_(std::move(set)), optimum_(std::move(optimum)),
      constants_(constants) {
  if (!oracle_) throw ConfigError("problem requires an oracle");
  if (set_.dim() != oracle_->dim()) throw DimensionError("oracle and feasible set dimensions differ");
  if (optimum_) {
    require_dim(optimum_->x, dim(), "known optimum");
    if (!std::isfinite(optimum_->f)) throw DomainError("known optimal value must be finite");
    if (!set_.contains(optimum_->x, 1e-9)) throw DomainError("known optimum lies outside the feasible set");
  }
}

Problem Problem::with_constants(ProblemConstants c) const {
  return Problem(oracle_, set_, optimum_, c);
}

}  // namespace fom
