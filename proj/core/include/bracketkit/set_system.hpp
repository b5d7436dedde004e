#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "bracketkit/element_set.hpp"
#include "bracketkit/fraction.hpp"

namespace bracketkit {

/// A finite ground set {0, ..., n-1} with a deduplicated family of ranges,
/// held in canonical order (size descending, then lexicographic).
class SetSystem {
 public:
  SetSystem() = default;
  /// Canonicalizes and deduplicates. Throws InputError on a universe mismatch.
  SetSystem(std::size_t ground_size, std::vector<ElementSet> ranges);

  static SetSystem from_index_lists(std::size_t ground_size,
                                    const std::vector<std::vector<std::size_t>>& ranges);

  std::size_t ground_size() const { return n_; }
  std::size_t size() const { return ranges_.size(); }
  bool empty() const { return ranges_.empty(); }
  const ElementSet& operator[](std::size_t i) const { return ranges_[i]; }
  std::span<const ElementSet> ranges() const { return ranges_; }
  auto begin() const { return ranges_.begin(); }
  auto end() const { return ranges_.end(); }

  /// Position of `range` in canonical order, if present.
  std::optional<std::size_t> find(const ElementSet& range) const;
  bool contains(const ElementSet& range) const { return find(range).has_value(); }

  friend bool operator==(const SetSystem&, const SetSystem&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<ElementSet> ranges_;
};

/// Trace of a system on a subset Y, re-indexed to {0, ..., |Y|-1}.
struct Projection {
  SetSystem system;
  std::vector<std::size_t> original_index;  ///< new index -> original index

  /// Maps a set over the projected ground set back to original indices.
  ElementSet lift(const ElementSet& local, std::size_t original_universe) const;
  /// Restricts an original-index set to Y and re-indexes it.
  ElementSet localize(const ElementSet& original) const;
};

Projection project(const SetSystem& system, const ElementSet& subset);
Projection project(const SetSystem& system, std::span<const std::size_t> subset);

/// {X \ R : R in ranges}
SetSystem complement_family(const SetSystem& system);

/// Cardinality interval with independently open or closed ends. Bounds are
/// exact rationals in absolute element counts (pass eps * n for a scaled bound).
struct SizeInterval {
  Fraction lo;
  bool lo_closed = true;
  Fraction hi;
  bool hi_closed = true;

  static SizeInterval closed(Fraction lo, Fraction hi) { return {lo, true, hi, true}; }
  static SizeInterval open(Fraction lo, Fraction hi) { return {lo, false, hi, false}; }
  static SizeInterval closed_open(Fraction lo, Fraction hi) { return {lo, true, hi, false}; }
  static SizeInterval open_closed(Fraction lo, Fraction hi) { return {lo, false, hi, true}; }
  static SizeInterval at_most(Fraction t) { return {Fraction(0), true, t, true}; }
  static SizeInterval at_least(Fraction t, std::size_t n) {
    return {t, true, Fraction(static_cast<std::int64_t>(n)), true};
  }

  bool contains(std::size_t size) const;
};

/// Ranges whose cardinality lies in `interval`. Throws InputError if lo > hi.
SetSystem filter_by_size(const SetSystem& system, const SizeInterval& interval);

struct VcDimension {
  std::size_t dimension = 0;
  /// True when the search stopped at `cap` with a shattered set still found.
  bool at_least = false;
  /// A shattered set of size `dimension`.
  std::vector<std::size_t> shattered;
};

/// Largest shattered subset size, searching k = 0, 1, ... up to `cap`.
VcDimension vc_dimension_exact(const SetSystem& system, std::size_t cap = 8);

/// True if the ranges realize all 2^|subset| traces on `subset`.
bool is_shattered(const SetSystem& system, std::span<const std::size_t> subset);

struct SauerShelahReport {
  std::size_t range_count = 0;
  std::size_t d0 = 0;
  mpz_class binomial_sum;    ///< sum_{i<=d0} C(n, i)
  double exponential_bound;  ///< (e n / d0)^d0
  bool passed = false;       ///< range_count <= binomial_sum
};

SauerShelahReport sauer_shelah_check(const SetSystem& system, std::size_t d0);

struct CellProfile {
  std::size_t subset_size = 0;
  std::size_t at_most = 0;
  std::size_t distinct_count = 0;
  double psi_hat = 0.0;  ///< distinct_count / subset_size
};

/// For every (sample, cap) pair, the number of distinct traces on the sample
/// that have at most `cap` elements.
std::vector<CellProfile> shallow_cell_profile(const SetSystem& system,
                                              std::span<const ElementSet> samples,
                                              std::span<const std::size_t> caps);

}  // namespace bracketkit
