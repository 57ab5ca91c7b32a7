#pragma once

#include "polydeg/arith.hpp"
#include "polydeg/linalg.hpp"

#include <optional>

namespace polydeg {

/// A point w with eq * w = eq_rhs and ge * w >= ge_rhs, or nullopt when none exists.
/// Phase-one simplex over the rationals with Bland's rule.
std::optional<Point> feasible_point(const RatMatrix& eq, const Point& eq_rhs, const RatMatrix& ge, const Point& ge_rhs,
                                    std::size_t dim);

}  // namespace polydeg
