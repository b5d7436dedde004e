#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bracketkit/families.hpp"
#include "bracketkit/geometry.hpp"
#include "bracketkit/set_system.hpp"

namespace bracketkit {

struct LabeledExample {
  std::size_t index = 0;
  int label = 1;  ///< +1 or -1
  friend bool operator==(const LabeledExample&, const LabeledExample&) = default;
};

struct LearningInstance {
  PointSet domain;
  std::vector<LabeledExample> alice;
  std::vector<LabeledExample> bob;
};

struct DisjointnessInstance {
  PointSet domain;
  std::vector<std::size_t> alice;
  std::vector<std::size_t> bob;
};

enum class Party { alice, bob };

struct Message {
  Party sender = Party::alice;
  std::string kind;     ///< "counterexample", "ok" or "empty"
  std::string payload;  ///< "index:label" for counterexamples, "0"/"1" for flags
  std::size_t bits = 0;
  friend bool operator==(const Message&, const Message&) = default;
};

struct Transcript {
  std::vector<Message> messages;
  std::size_t total_bits = 0;

  void append(Message m) {
    total_bits += m.bits;
    messages.push_back(std::move(m));
  }
  /// One JSON object per message: sender, kind, payload, bits.
  std::string to_jsonl() const;
  friend bool operator==(const Transcript&, const Transcript&) = default;
};

/// State both parties derive from the shared domain: the halfspace ranges of
/// U as the hypothesis class and, on request, an eps0-container and
/// eps0-bracket of those ranges.
class ProtocolContext {
 public:
  explicit ProtocolContext(PointSet domain, Fraction eps0 = Fraction(1, 8), bool build_families = false);

  const PointSet& domain() const { return domain_; }
  const SetSystem& hypotheses() const { return hypotheses_; }
  const Fraction& eps0() const { return eps0_; }
  const std::optional<ContainerFamily>& container() const { return container_; }
  const std::optional<BracketFamily>& bracket() const { return bracket_; }

  /// Bit i of column(x) says whether hypothesis i contains domain point x.
  const std::vector<std::uint64_t>& column(std::size_t x) const { return columns_[x]; }
  std::size_t words() const { return words_; }

 private:
  PointSet domain_;
  Fraction eps0_;
  SetSystem hypotheses_;
  std::optional<ContainerFamily> container_;
  std::optional<BracketFamily> bracket_;
  std::size_t words_ = 0;
  std::vector<std::vector<std::uint64_t>> columns_;
};

struct LearningOutcome {
  bool aborted = false;
  ElementSet classifier;  ///< points labeled +1
  /// Index into hypotheses() when the classifier is itself a halfspace range.
  std::optional<std::size_t> hypothesis;
  /// Cover of the final hypothesis in the context's container, if built.
  std::optional<std::size_t> cover;
  std::vector<LabeledExample> certificate;  ///< the shared examples T on abort
  Transcript transcript;
  std::size_t rounds = 0;
  bool consistent = false;  ///< classifier agrees with every example of both parties
};

/// Counterexample-driven halving over the shared hypothesis class. Each
/// round both parties compute the same hypothesis from the shared examples
/// T: the majority vote of all hypotheses consistent with T, and once both
/// parties accept a vote that is not itself a hypothesis, the consistent
/// hypothesis closest to it. Alice, then Bob, sends either her lowest-index
/// misclassified example (ceil(log2 n) + 1 bits) or a 1-bit OK. The run
/// ends when both send OK, or aborts when no hypothesis is consistent with T.
LearningOutcome learn_halfspace_protocol(const ProtocolContext& ctx, const LearningInstance& inst);

enum class DisjointnessAnswer { disjoint, intersecting };

struct DisjointnessOutcome {
  DisjointnessAnswer answer = DisjointnessAnswer::disjoint;
  /// Separating hypothesis (S_a inside, S_b outside) when disjoint and both
  /// sides are nonempty.
  std::optional<ElementSet> separator;
  std::vector<LabeledExample> certificate;
  Transcript transcript;
  std::size_t rounds = 0;
};

/// Each party first announces with one bit whether its set is empty; if not,
/// the learning protocol runs on Alice's points labeled +1 and Bob's -1, and
/// an abort means the hulls intersect.
DisjointnessOutcome convex_disjointness_protocol(const ProtocolContext& ctx, const DisjointnessInstance& inst);

/// Points with integer coordinates in [-range, range] and no d+1 on a common
/// hyperplane; the seed is advanced until the draw is in general position.
PointSet general_position_points(std::size_t d, std::size_t n, std::uint64_t seed, std::int64_t range = 1000000);

/// Labels a random sample of the domain by a random hypothesis and splits
/// the sample between the parties. Throws InvariantError if the labels are
/// not separable by exact hull test.
LearningInstance random_learning_instance(const ProtocolContext& ctx, std::uint64_t seed);

/// Random nonempty index sets; about half the draws come from the two sides
/// of a random hypothesis (disjoint hulls), the rest are unconstrained.
DisjointnessInstance random_disjointness_instance(const ProtocolContext& ctx, std::uint64_t seed);

}  // namespace bracketkit
