#pragma once

#include "tropres/exactmath.hpp"

namespace tropres {

struct LPResult {
    bool unbounded = false;
    Rational value;
    RatVector x;
};

// Maximizes c.x subject to A x <= b, x >= 0, with b >= 0 so that the origin is
// feasible. Dense tableau simplex with Bland's rule, exact rationals.
LPResult lp_maximize(const std::vector<RatVector>& a, const RatVector& b, const RatVector& c);

}  // namespace tropres
