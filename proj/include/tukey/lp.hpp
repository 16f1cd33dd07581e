// Dense two-phase simplex over the rationals with Bland's rule.
//
// Only used at desk scale: the constraint matrices handed to it have few rows
// (p + 1) and one column per halfspace.
#pragma once

#include "tukey/numeric.hpp"

namespace tukey::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
  Status status = Status::infeasible;
  VectorQ solution;  // valid when optimal
  Rational objective;
};

/// min c . y  subject to  A y = b, y >= 0.
Result minimize(const MatrixQ& a, const VectorQ& b, const VectorQ& c);

/// Feasibility of A y = b, y >= 0 (phase one only).
bool feasible(const MatrixQ& a, const VectorQ& b);

}  // namespace tukey::lp
