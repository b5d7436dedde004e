#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "bracketkit/families.hpp"
#include "bracketkit/set_system.hpp"

namespace bracketkit {

struct Counterexample {
  std::size_t range_index = 0;
  ElementSet range;
  std::string reason;
};

/// Observed heaviness |M|/|R| (Mnets) or slack/n (containers, brackets)
/// over the ranges that were checked and passed.
struct WitnessStats {
  double min_ratio = 0.0;
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
};

struct VerifyReport {
  bool passed = true;
  std::size_t checked = 0;
  std::optional<Counterexample> counterexample;
  WitnessStats stats;
};

/// Checks every range with |R| >= epsilon n for a piece M ⊆ R with
/// |M| >= lambda |R|. Reports the first failure in canonical order.
VerifyReport verify_mnet(const SetSystem& system, const MnetFamily& family);

/// Checks every range for a cover C ⊇ R with |C \ R| <= epsilon n. A witness
/// hint is tried first and re-checked; on a bad hint all covers are scanned.
VerifyReport verify_container(const SetSystem& system, const ContainerFamily& family);

/// Checks every range for B- ⊆ R ⊆ B+ with |B+ \ B-| <= epsilon n.
VerifyReport verify_bracket(const SetSystem& system, const BracketFamily& family);

/// Size of a greedy maximal packing at threshold 2 epsilon n. Two ranges in
/// one cover of an epsilon-container differ in at most 2 epsilon n elements,
/// so every epsilon-container has at least this many covers.
std::size_t container_lower_bound(const SetSystem& system, const Fraction& epsilon);

}  // namespace bracketkit
