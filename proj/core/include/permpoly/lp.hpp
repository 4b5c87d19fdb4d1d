#pragma once

#include <optional>
#include <vector>

#include "permpoly/matrix.hpp"

namespace permpoly {

/// Some x >= 0 with A x = b, found by phase-one simplex with Bland's rule,
/// or nullopt when the system is infeasible. Rows with negative b are
/// negated internally. Throws DimensionMismatch.
std::optional<RatVector> feasible_point(const RatMatrix& a, const RatVector& b);

/// c . x = delta on the inside points and c . x < delta on the outside ones.
struct Functional {
  RatVector c;
  Rational delta;
};

/// Rows of `points` are points. Returns a functional exposing exactly the
/// inside rows among inside + outside, scaled so that c is a primitive
/// integer vector, or nullopt if none exists.
///
/// With no inside points the answer is (0, 1); with no outside points it is
/// (0, 0). Throws DimensionMismatch on out-of-range indices and
/// InvalidArgument when the index sets intersect.
std::optional<Functional> separating_functional(const RatMatrix& points,
                                                const std::vector<std::size_t>& inside,
                                                const std::vector<std::size_t>& outside);

}  // namespace permpoly
