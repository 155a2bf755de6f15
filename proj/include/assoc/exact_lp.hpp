#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace assoc::exact {

using Rational = boost::multiprecision::cpp_rational;
using Vector = std::vector<Rational>;

/// Decides whether some lambda >= 0 satisfies A lambda = b, where A is given
/// by its columns.  Phase-one simplex over the rationals with Bland's rule,
/// so the answer is exact and the pivot sequence deterministic.
bool feasible(const std::vector<Vector>& columns, const Vector& b);

/// True iff p is a convex combination of `points`.
bool in_convex_hull(const Vector& p, const std::vector<Vector>& points);

/// True iff points[i] is not a convex combination of the other points.
bool is_extreme(std::size_t i, const std::vector<Vector>& points);

template <class Int>
Vector to_rational(const std::vector<Int>& v) {
  return Vector(v.begin(), v.end());
}

}  // namespace assoc::exact
