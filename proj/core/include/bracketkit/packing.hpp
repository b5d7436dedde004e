#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bracketkit/set_system.hpp"

namespace bracketkit {

/// A delta-packing: members pairwise differ in more than `delta` elements.
struct Packing {
  std::size_t ground_size = 0;
  std::vector<ElementSet> members;
  std::vector<std::size_t> source_index;  ///< member -> index in the base system
  std::size_t delta = 0;
  std::optional<std::size_t> shallow_cap;  ///< every member has at most this many elements

  std::size_t size() const { return members.size(); }
  /// Whether `range` is one the maximality guarantee applies to.
  bool within_cap(const ElementSet& range) const { return !shallow_cap || range.count() <= *shallow_cap; }
};

/// Scans ranges in canonical order (skipping those above the cap) and admits
/// a range iff it differs from every admitted member in more than `delta`
/// elements. The result is maximal.
Packing greedy_delta_packing(const SetSystem& system, std::size_t delta,
                             std::optional<std::size_t> shallow_cap = std::nullopt);

struct NearestMember {
  std::size_t member = 0;
  std::size_t distance = 0;
};

/// Member minimizing |range ∆ member|, first in packing order on ties.
/// Throws InputError if `range` exceeds the cap or the packing is empty.
NearestMember nearest_neighbor(const Packing& packing, const ElementSet& range);

struct PackingBoundReport {
  std::size_t member_count = 0;
  std::size_t d0 = 0;
  double haussler_term = 0.0;  ///< (n / delta)^d0
  double c_hat = 0.0;          ///< delta / n * |members|^(1/d0)
  /// Present for shallow packings: 24 d0 n / delta * psi_hat, with psi_hat
  /// measured on samples of size 4 d0 n / delta at cap 12 d0 k / delta.
  std::optional<double> shallow_expression;
  std::optional<double> psi_hat;
};

/// Throws InputError if delta or d0 is zero.
PackingBoundReport packing_bound_report(const SetSystem& system, const Packing& packing, std::size_t d0);

}  // namespace bracketkit
