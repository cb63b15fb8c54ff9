#pragma once

// Exact rational simplex, internal to the geometry engine. Not installed.
//
// Solves  maximize c.x  subject to  A x <= b,  E x = f,  and x_i >= 0 for
// the flagged variables (others free). Bland's anti-cycling rule is used in
// both phases, so termination is guaranteed on degenerate inputs.

#include "bellkit/rational.hpp"

namespace bellkit::lp {

struct Problem {
    int num_vars = 0;
    std::vector<bool> nonneg;  // per variable; false = free
    RatVec objective;          // maximize objective . x
    RatMat ub_rows;
    RatVec ub_rhs;
    RatMat eq_rows;
    RatVec eq_rhs;
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
    Status status = Status::Infeasible;
    Rational value;  // optimal objective value
    RatVec x;        // optimal point

    // Infeasibility certificate: y (over ub rows, y >= 0) and z (over eq
    // rows, free) such that  sum_i y_i A_i + sum_j z_j E_j  is >= 0 on
    // every nonneg variable and 0 on every free one, while
    // y.b + z.f < 0. Verified before returning.
    RatVec farkas_ub, farkas_eq;

    // Unboundedness certificate: direction r with A r <= 0, E r = 0,
    // r_i >= 0 for nonneg variables and objective . r > 0.
    RatVec ray;
};

Solution solve(const Problem& problem);

}  // namespace bellkit::lp
