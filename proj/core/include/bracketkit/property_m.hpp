#pragma once

#include <cstddef>
#include <vector>

#include "bracketkit/families.hpp"
#include "bracketkit/set_system.hpp"

namespace bracketkit {

/// Greedy lambda-heavy epsilon-Mnet. Candidates are the ranges with
/// |R| >= epsilon n and, for up to 128 such ranges, their pairwise
/// intersections; the candidate serving the most unserved ranges is taken
/// until every heavy range is served. Any range still unserved gets its own
/// first ceil(lambda |R|) elements. Requires 0 < lambda <= 1 and epsilon > 0;
/// epsilon > 1 gives an empty family.
MnetFamily base_mnet(const SetSystem& system, const Fraction& lambda, const Fraction& epsilon);

/// Supplies Lambda-heavy epsilon-Mnets for arbitrary projected systems and
/// records what it produced. Not thread-safe; use one instance per thread.
class PropertyMProvider {
 public:
  struct LogEntry {
    Fraction epsilon;
    std::size_t ground_size = 0;
    std::size_t range_count = 0;
    std::size_t produced = 0;
  };

  explicit PropertyMProvider(Fraction Lambda = Fraction(1, 2));

  const Fraction& Lambda() const { return Lambda_; }

  /// Verified Lambda-heavy epsilon-Mnet of `system`. Throws InvariantError if
  /// verification fails.
  MnetFamily mnet(const SetSystem& system, const Fraction& epsilon);

  const std::vector<LogEntry>& bound_log() const { return log_; }

  /// Recursion depth bookkeeping for constructions that call the provider.
  void record_depth(std::size_t depth, std::size_t cap);
  std::size_t max_depth() const { return max_depth_; }
  std::size_t depth_cap() const { return depth_cap_; }
  bool depth_cap_respected() const { return cap_respected_; }

 private:
  Fraction Lambda_;
  std::vector<LogEntry> log_;
  std::size_t max_depth_ = 0;
  std::size_t depth_cap_ = 0;
  bool cap_respected_ = true;
};

}  // namespace bracketkit
