#include "bracketkit/verify.hpp"

#include <algorithm>
#include <limits>

#include "bracketkit/errors.hpp"
#include "bracketkit/packing.hpp"

namespace bracketkit {

namespace {

class StatsAccumulator {
 public:
  void add(double r) {
    lo_ = std::min(lo_, r);
    hi_ = std::max(hi_, r);
    sum_ += r;
    ++count_;
  }
  WitnessStats get() const {
    if (count_ == 0) return {};
    return {lo_, hi_, sum_ / static_cast<double>(count_)};
  }

 private:
  double lo_ = std::numeric_limits<double>::infinity();
  double hi_ = -std::numeric_limits<double>::infinity();
  double sum_ = 0.0;
  std::size_t count_ = 0;
};

void fail(VerifyReport& report, std::size_t index, const ElementSet& range, std::string reason) {
  report.passed = false;
  report.counterexample = Counterexample{index, range, std::move(reason)};
}

void check_universe(const SetSystem& system, std::size_t family_ground, const std::vector<ElementSet>& sets) {
  if (family_ground != system.ground_size())
    throw InputError("family ground size " + std::to_string(family_ground) + " differs from system size " +
                     std::to_string(system.ground_size()));
  for (const auto& s : sets)
    if (s.universe() != system.ground_size()) throw InputError("family set over a different ground set");
}

}  // namespace

VerifyReport verify_mnet(const SetSystem& system, const MnetFamily& family) {
  check_universe(system, family.ground_size, family.pieces);
  const std::size_t n = system.ground_size();
  const std::int64_t threshold = family.epsilon.ceil_mul(static_cast<std::int64_t>(n));
  VerifyReport report;
  StatsAccumulator stats;
  for (std::size_t i = 0; i < system.size(); ++i) {
    const ElementSet& r = system[i];
    const std::size_t size = r.count();
    if (static_cast<std::int64_t>(size) < threshold) continue;
    ++report.checked;
    const std::int64_t need = family.lambda.ceil_mul(static_cast<std::int64_t>(size));
    std::size_t best = 0;
    bool found = false;
    for (const auto& m : family.pieces) {
      const std::size_t c = m.count();
      if (static_cast<std::int64_t>(c) < need || (found && c <= best)) continue;
      if (m.is_subset_of(r)) {
        best = c;
        found = true;
      }
    }
    if (!found) {
      fail(report, i, r, "no piece contained in the range with at least " + family.lambda.str() + " of its " +
                             std::to_string(size) + " elements");
      break;
    }
    stats.add(size == 0 ? 1.0 : static_cast<double>(best) / static_cast<double>(size));
  }
  report.stats = stats.get();
  return report;
}

VerifyReport verify_container(const SetSystem& system, const ContainerFamily& family) {
  check_universe(system, family.ground_size, family.covers);
  if (!family.witness.empty() && family.witness.size() != system.size())
    throw InputError("container witness map has the wrong length");
  const std::size_t n = system.ground_size();
  const std::int64_t slack = family.epsilon.floor_mul(static_cast<std::int64_t>(n));
  VerifyReport report;
  StatsAccumulator stats;
  auto fits = [&](const ElementSet& c, const ElementSet& r, std::size_t& extra) {
    if (!r.is_subset_of(c)) return false;
    extra = c.count() - r.count();
    return static_cast<std::int64_t>(extra) <= slack;
  };
  for (std::size_t i = 0; i < system.size(); ++i) {
    const ElementSet& r = system[i];
    ++report.checked;
    std::size_t extra = 0;
    bool ok = false;
    if (!family.witness.empty() && family.witness[i] && *family.witness[i] < family.covers.size())
      ok = fits(family.covers[*family.witness[i]], r, extra);
    if (!ok) {
      std::size_t best = std::numeric_limits<std::size_t>::max();
      for (const auto& c : family.covers) {
        std::size_t e = 0;
        if (fits(c, r, e) && e < best) best = e;
      }
      ok = best != std::numeric_limits<std::size_t>::max();
      extra = best;
    }
    if (!ok) {
      fail(report, i, r, "no cover contains the range with at most " + std::to_string(slack) + " extra elements");
      break;
    }
    stats.add(n == 0 ? 0.0 : static_cast<double>(extra) / static_cast<double>(n));
  }
  report.stats = stats.get();
  return report;
}

VerifyReport verify_bracket(const SetSystem& system, const BracketFamily& family) {
  check_universe(system, family.ground_size, family.sets);
  if (!family.pairing.empty() && family.pairing.size() != system.size())
    throw InputError("bracket pairing map has the wrong length");
  const std::size_t n = system.ground_size();
  const std::int64_t slack = family.epsilon.floor_mul(static_cast<std::int64_t>(n));
  VerifyReport report;
  StatsAccumulator stats;
  for (std::size_t i = 0; i < system.size(); ++i) {
    const ElementSet& r = system[i];
    ++report.checked;
    std::optional<std::size_t> gap;
    if (!family.pairing.empty() && family.pairing[i]) {
      const auto [lo, hi] = *family.pairing[i];
      if (lo < family.sets.size() && hi < family.sets.size()) {
        const ElementSet& a = family.sets[lo];
        const ElementSet& b = family.sets[hi];
        if (a.is_subset_of(r) && r.is_subset_of(b) && static_cast<std::int64_t>(b.count() - a.count()) <= slack)
          gap = b.count() - a.count();
      }
    }
    if (!gap) {
      // With B- ⊆ R ⊆ B+ the gap is |B+| - |B-|, so the two sides are chosen independently.
      std::optional<std::size_t> lower, upper;
      for (const auto& s : family.sets) {
        const std::size_t c = s.count();
        if ((!lower || c > *lower) && s.is_subset_of(r)) lower = c;
        if ((!upper || c < *upper) && r.is_subset_of(s)) upper = c;
      }
      if (!lower || !upper) {
        fail(report, i, r, !lower ? "no set of the family lies inside the range" : "no set of the family contains the range");
        break;
      }
      if (static_cast<std::int64_t>(*upper - *lower) > slack) {
        fail(report, i, r, "tightest bracket leaves " + std::to_string(*upper - *lower) + " elements, more than " +
                               std::to_string(slack));
        break;
      }
      gap = *upper - *lower;
    }
    stats.add(n == 0 ? 0.0 : static_cast<double>(*gap) / static_cast<double>(n));
  }
  report.stats = stats.get();
  return report;
}

std::size_t container_lower_bound(const SetSystem& system, const Fraction& epsilon) {
  const auto delta = (Fraction(2) * epsilon).floor_mul(static_cast<std::int64_t>(system.ground_size()));
  return greedy_delta_packing(system, static_cast<std::size_t>(std::max<std::int64_t>(delta, 0))).size();
}

}  // namespace bracketkit
