#include "bracketkit/property_m.hpp"

#include <algorithm>
#include <unordered_map>

#include "bracketkit/errors.hpp"
#include "bracketkit/verify.hpp"

namespace bracketkit {

namespace {

constexpr std::size_t kPairwiseLimit = 128;

struct Bits {
  std::vector<std::uint64_t> w;
  explicit Bits(std::size_t n) : w((n + 63) / 64, 0) {}
  void set(std::size_t i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
  std::size_t and_count(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w.size(); ++i) c += static_cast<std::size_t>(__builtin_popcountll(w[i] & o.w[i]));
    return c;
  }
  void subtract(const Bits& o) {
    for (std::size_t i = 0; i < w.size(); ++i) w[i] &= ~o.w[i];
  }
};

}  // namespace

MnetFamily base_mnet(const SetSystem& system, const Fraction& lambda, const Fraction& epsilon) {
  if (!lambda.is_positive() || lambda > Fraction(1)) throw ParameterError("base_mnet needs 0 < lambda <= 1");
  if (!epsilon.is_positive()) throw ParameterError("base_mnet needs epsilon > 0");
  const std::size_t n = system.ground_size();
  MnetFamily out{n, {}, lambda, epsilon};
  const auto threshold = epsilon.ceil_mul(static_cast<std::int64_t>(n));

  std::vector<const ElementSet*> heavy;
  std::vector<std::int64_t> need;
  for (const auto& r : system)
    if (static_cast<std::int64_t>(r.count()) >= threshold) {
      heavy.push_back(&r);
      need.push_back(lambda.ceil_mul(static_cast<std::int64_t>(r.count())));
    }
  const std::size_t h = heavy.size();
  if (h == 0) return out;

  std::vector<ElementSet> candidates;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  auto add_candidate = [&](ElementSet c) {
    if (seen.emplace(c, candidates.size()).second) candidates.push_back(std::move(c));
  };
  for (const auto* r : heavy) add_candidate(*r);
  if (h <= kPairwiseLimit)
    for (std::size_t i = 0; i < h; ++i)
      for (std::size_t j = i + 1; j < h; ++j) add_candidate(*heavy[i] & *heavy[j]);

  std::vector<Bits> serves;
  serves.reserve(candidates.size());
  for (const auto& c : candidates) {
    Bits b(h);
    const auto size = static_cast<std::int64_t>(c.count());
    for (std::size_t i = 0; i < h; ++i)
      if (size >= need[i] && c.is_subset_of(*heavy[i])) b.set(i);
    serves.push_back(std::move(b));
  }

  Bits unserved(h);
  for (std::size_t i = 0; i < h; ++i) unserved.set(i);
  std::size_t remaining = h;
  while (remaining > 0) {
    std::size_t best = candidates.size();
    std::size_t gain = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const std::size_t g = serves[c].and_count(unserved);
      if (g > gain) {
        gain = g;
        best = c;
      }
    }
    if (gain == 0) break;
    out.pieces.push_back(candidates[best]);
    unserved.subtract(serves[best]);
    remaining -= gain;
  }
  if (remaining > 0) {
    for (std::size_t i = 0; i < h; ++i) {
      if (!unserved.test(i)) continue;
      ElementSet piece(n);
      std::int64_t taken = 0;
      heavy[i]->for_each([&](std::size_t e) {
        if (taken < need[i]) {
          piece.set(e);
          ++taken;
        }
      });
      out.pieces.push_back(std::move(piece));
    }
  }
  return out;
}

PropertyMProvider::PropertyMProvider(Fraction Lambda) : Lambda_(std::move(Lambda)) {
  if (!Lambda_.is_positive() || Lambda_ > Fraction(1)) throw ParameterError("provider needs 0 < Lambda <= 1");
}

MnetFamily PropertyMProvider::mnet(const SetSystem& system, const Fraction& epsilon) {
  MnetFamily m = base_mnet(system, Lambda_, epsilon);
  const VerifyReport report = verify_mnet(system, m);
  if (!report.passed)
    throw InvariantError("provider produced an invalid Mnet: " + report.counterexample->reason);
  log_.push_back({epsilon, system.ground_size(), system.size(), m.size()});
  return m;
}

void PropertyMProvider::record_depth(std::size_t depth, std::size_t cap) {
  max_depth_ = std::max(max_depth_, depth);
  depth_cap_ = std::max(depth_cap_, cap);
  if (depth > cap) cap_respected_ = false;
}

}  // namespace bracketkit
