#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bracketkit/element_set.hpp"
#include "bracketkit/fraction.hpp"

namespace bracketkit {

/// Every range with |R| >= epsilon n should contain a piece with at least
/// lambda |R| elements.
struct MnetFamily {
  std::size_t ground_size = 0;
  std::vector<ElementSet> pieces;
  Fraction lambda;
  Fraction epsilon;

  std::size_t size() const { return pieces.size(); }
};

/// Every range F should lie in a cover C with |C \ F| <= epsilon n.
struct ContainerFamily {
  std::size_t ground_size = 0;
  std::vector<ElementSet> covers;
  Fraction epsilon;
  /// Optional hint: base range index -> cover index. Empty when absent.
  std::vector<std::optional<std::size_t>> witness;

  std::size_t size() const { return covers.size(); }
};

/// Every range F should satisfy B- ⊆ F ⊆ B+ with |B+ \ B-| <= epsilon n for
/// some pair of sets.
struct BracketFamily {
  std::size_t ground_size = 0;
  std::vector<ElementSet> sets;
  Fraction epsilon;
  /// Optional hint: base range index -> (lower, upper) set indices.
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> pairing;

  std::size_t size() const { return sets.size(); }
};

}  // namespace bracketkit
