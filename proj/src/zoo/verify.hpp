#pragma once

#include "fom/zoo/zoo.hpp"

namespace fom::detail {

// Sampled sandwich check of the declared L1 around the optimum or the origin;
// throws NumericalError when the declaration is wrong.
void verify_declared_smoothness(const ZooProblem& zoo, double radius);

}  // namespace fom::detail
