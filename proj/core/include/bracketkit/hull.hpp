#pragma once

#include <cstddef>
#include <vector>

#include "bracketkit/geometry.hpp"

namespace bracketkit {

struct HullIntersection {
  bool intersecting = false;
  /// A common point of both hulls when intersecting.
  std::vector<Rational> witness;
  /// When disjoint and both sides are nonempty: <normal, p> >= lower for
  /// every point of a, <normal, q> <= upper for every point of b, upper < lower.
  std::vector<Rational> normal;
  Rational lower;
  Rational upper;
};

/// Decides whether conv(a) and conv(b) meet, by exact phase-one simplex
/// (Bland's rule) on sum l_i p_i = sum m_j q_j, sum l = sum m = 1, l, m >= 0.
/// The separating functional comes from the Farkas certificate of an
/// infeasible system. An empty side is disjoint from everything.
HullIntersection exact_hull_intersection(const PointSet& domain, const std::vector<std::size_t>& a,
                                         const std::vector<std::size_t>& b);

}  // namespace bracketkit
