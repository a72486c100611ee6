#pragma once

#include <vector>

#include "mdyn/intpoly.hpp"

namespace mdyn {

using IntMatrix = std::vector<Coeffs>;

// LLL reduction of the rows of b (delta 0.99, eta 0.51). The basis stays
// exact; Gram-Schmidt data is floating point, in the style of the L^2
// algorithm. Rows must be linearly independent.
void lll_reduce(IntMatrix& b, double delta = 0.99);

}  // namespace mdyn
