#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bracketkit/fraction.hpp"
#include "bracketkit/rational.hpp"
#include "bracketkit/set_system.hpp"

namespace bracketkit {

/// n points in R^d with exact rational coordinates.
struct PointSet {
  std::size_t dim = 0;
  std::vector<std::vector<Rational>> points;

  std::size_t size() const { return points.size(); }
  /// Throws InputError if any point has the wrong length.
  void validate() const;
  friend bool operator==(const PointSet&, const PointSet&) = default;
};

enum class Sense { at_least, greater, equal };

/// The set {x : <normal, x> (sense) offset}.
struct LinearQuery {
  std::vector<Rational> normal;
  Rational offset;
  Sense sense = Sense::at_least;

  bool contains(const std::vector<Rational>& x) const;
  /// Indices of the points of `pts` the query selects.
  ElementSet select(const PointSet& pts) const;
};

struct WitnessedRange {
  ElementSet range;
  LinearQuery query;
};

/// All distinct traces of closed halfspaces on `pts`, including the empty set
/// and the whole set. Requires general position; throws DegeneracyError when
/// d+1 points lie on a common hyperplane.
SetSystem enumerate_halfspace_ranges(const PointSet& pts);

/// Same ranges as enumerate_halfspace_ranges, each with an exact halfspace
/// that cuts it out (no point on the boundary).
std::vector<WitnessedRange> enumerate_halfspace_queries(const PointSet& pts);

/// Traces of closed balls, via the paraboloid lift p -> (p, |p|^2).
SetSystem enumerate_ball_ranges(const PointSet& pts);

/// Traces of closed axis-parallel boxes. No general-position requirement.
SetSystem enumerate_box_ranges(const PointSet& pts);

/// Intersections of at most k halfspace ranges. Throws ResourceError if an
/// intermediate family exceeds `budget` ranges.
SetSystem enumerate_polytope_ranges(const PointSet& pts, std::size_t k,
                                    std::size_t budget = std::size_t{1} << 20);

/// Maps each point to all monomials of total degree 1..degree, graded and,
/// within a degree, in decreasing powers of the leading coordinates.
/// Output dimension is C(d + degree, degree) - 1.
PointSet veronese_lift(const PointSet& pts, std::size_t degree);

/// Exponent vectors used by veronese_lift, in output order.
std::vector<std::vector<std::size_t>> veronese_monomials(std::size_t dim, std::size_t degree);

/// p -> (p, |p|^2)
PointSet paraboloid_lift(const PointSet& pts);

enum class InstanceKind { sphere, moment_curve, grid };

/// Deterministic rational point sets used for lower-bound experiments.
///   sphere:       n exactly-unit rational points approximating equally spaced
///                 directions (d = 1: n evenly spaced points of [-1, 1])
///   moment_curve: (t, t^2, ..., t^d) for t = 1..n
///   grid:         the first n lattice points of a side-ceil(n^(1/d)) grid
PointSet lower_bound_instance(std::size_t d, std::size_t n, InstanceKind kind);

/// Adds k * scale / 1024 to every coordinate, k uniform in [-512, 512],
/// drawn from a seeded generator.
PointSet jitter(const PointSet& pts, const Fraction& scale, std::uint64_t seed);

/// n points with integer coordinates uniform in [-range, range].
PointSet random_points(std::size_t d, std::size_t n, std::uint64_t seed, std::int64_t range = 1000);

}  // namespace bracketkit
