#include "bracketkit/protocols.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include <nlohmann/json.hpp>

#include "bracketkit/constructions.hpp"
#include "bracketkit/errors.hpp"
#include "bracketkit/hull.hpp"

namespace bracketkit {

std::string Transcript::to_jsonl() const {
  std::string out;
  for (const auto& m : messages) {
    nlohmann::ordered_json j;
    j["sender"] = m.sender == Party::alice ? "alice" : "bob";
    j["kind"] = m.kind;
    j["payload"] = m.payload;
    j["bits"] = m.bits;
    out += j.dump();
    out += '\n';
  }
  return out;
}

ProtocolContext::ProtocolContext(PointSet domain, Fraction eps0, bool build_families)
    : domain_(std::move(domain)), eps0_(std::move(eps0)), hypotheses_(enumerate_halfspace_ranges(domain_)) {
  const std::size_t n = domain_.size();
  words_ = (hypotheses_.size() + 63) / 64;
  columns_.assign(n, std::vector<std::uint64_t>(words_, 0));
  for (std::size_t h = 0; h < hypotheses_.size(); ++h)
    hypotheses_[h].for_each([&](std::size_t x) { columns_[x][h >> 6] |= std::uint64_t{1} << (h & 63); });
  if (build_families) {
    PropertyMProvider provider, provider_complement;
    container_ = build_container(hypotheses_, eps0_, provider_complement);
    bracket_ = build_bracket(hypotheses_, eps0_, provider, provider_complement);
  }
}

namespace {

std::size_t index_bits(std::size_t n) {
  return n <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(n - 1));
}

class VersionSpace {
 public:
  explicit VersionSpace(const ProtocolContext& ctx) : ctx_(ctx), alive_(ctx.words(), ~std::uint64_t{0}) {
    const std::size_t h = ctx.hypotheses().size();
    if (h % 64 != 0) alive_.back() = (std::uint64_t{1} << (h % 64)) - 1;
    if (h == 0) alive_.clear();
  }

  void restrict(const LabeledExample& e) {
    const auto& col = ctx_.column(e.index);
    for (std::size_t w = 0; w < alive_.size(); ++w) alive_[w] &= e.label > 0 ? col[w] : ~col[w];
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (auto w : alive_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Points contained in at least half of the surviving hypotheses.
  ElementSet majority() const {
    const std::size_t total = size();
    const std::size_t n = ctx_.domain().size();
    ElementSet out(n);
    for (std::size_t x = 0; x < n; ++x) {
      const auto& col = ctx_.column(x);
      std::size_t c = 0;
      for (std::size_t w = 0; w < alive_.size(); ++w) c += static_cast<std::size_t>(std::popcount(alive_[w] & col[w]));
      if (2 * c >= total) out.set(x);
    }
    return out;
  }

  std::optional<std::size_t> find(const ElementSet& s) const {
    const auto idx = ctx_.hypotheses().find(s);
    if (idx && ((alive_[*idx >> 6] >> (*idx & 63)) & 1u)) return idx;
    return std::nullopt;
  }

  /// Surviving hypothesis closest to `target`, lowest index on ties.
  std::size_t closest(const ElementSet& target) const {
    std::size_t best = 0, best_d = 0;
    bool found = false;
    for (std::size_t w = 0; w < alive_.size(); ++w) {
      std::uint64_t bits = alive_[w];
      while (bits != 0) {
        const std::size_t h = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const std::size_t d = sym_diff_size(ctx_.hypotheses()[h], target);
        if (!found || d < best_d) {
          best = h;
          best_d = d;
          found = true;
        }
      }
    }
    return best;
  }

 private:
  const ProtocolContext& ctx_;
  std::vector<std::uint64_t> alive_;
};

std::optional<LabeledExample> first_mistake(const std::vector<LabeledExample>& examples, const ElementSet& h) {
  std::optional<LabeledExample> best;
  for (const auto& e : examples)
    if ((h.test(e.index) ? 1 : -1) != e.label && (!best || e.index < best->index)) best = e;
  return best;
}

void check_examples(const ProtocolContext& ctx, const std::vector<LabeledExample>& examples) {
  for (const auto& e : examples) {
    if (e.index >= ctx.domain().size()) throw InputError("example index outside the domain");
    if (e.label != 1 && e.label != -1) throw InputError("labels must be +1 or -1");
  }
}

std::optional<std::size_t> cover_of(const ProtocolContext& ctx, std::size_t hypothesis) {
  if (!ctx.container()) return std::nullopt;
  const auto& c = *ctx.container();
  if (!c.witness.empty() && c.witness[hypothesis]) return c.witness[hypothesis];
  return std::nullopt;
}

}  // namespace

LearningOutcome learn_halfspace_protocol(const ProtocolContext& ctx, const LearningInstance& inst) {
  if (!(inst.domain == ctx.domain())) throw InputError("instance domain differs from the protocol context");
  check_examples(ctx, inst.alice);
  check_examples(ctx, inst.bob);
  const std::size_t n = ctx.domain().size();
  const std::size_t example_bits = index_bits(n) + 1;

  LearningOutcome out;
  VersionSpace v(ctx);
  bool proper = false;
  for (;;) {
    if (v.size() == 0) {
      out.aborted = true;
      out.classifier = ElementSet(n);
      break;
    }
    ++out.rounds;
    ElementSet h = proper ? ctx.hypotheses()[v.closest(v.majority())] : v.majority();
    bool all_ok = true;
    for (Party p : {Party::alice, Party::bob}) {
      const auto& mine = p == Party::alice ? inst.alice : inst.bob;
      if (auto e = first_mistake(mine, h)) {
        all_ok = false;
        out.transcript.append(
            {p, "counterexample", std::to_string(e->index) + ":" + (e->label > 0 ? "+1" : "-1"), example_bits});
        out.certificate.push_back(*e);
        v.restrict(*e);
      } else {
        out.transcript.append({p, "ok", "1", 1});
      }
    }
    if (!all_ok) continue;
    if (auto idx = v.find(h)) {
      out.hypothesis = idx;
      out.classifier = std::move(h);
      break;
    }
    if (proper) throw InvariantError("accepted proper hypothesis is not consistent with the shared examples");
    proper = true;
  }

  if (!out.aborted) {
    out.consistent = !first_mistake(inst.alice, out.classifier) && !first_mistake(inst.bob, out.classifier);
    if (out.hypothesis) out.cover = cover_of(ctx, *out.hypothesis);
  }
  return out;
}

DisjointnessOutcome convex_disjointness_protocol(const ProtocolContext& ctx, const DisjointnessInstance& inst) {
  DisjointnessOutcome out;
  out.transcript.append({Party::alice, "empty", inst.alice.empty() ? "1" : "0", 1});
  out.transcript.append({Party::bob, "empty", inst.bob.empty() ? "1" : "0", 1});
  if (inst.alice.empty() || inst.bob.empty()) return out;

  LearningInstance learn{inst.domain, {}, {}};
  for (std::size_t i : inst.alice) learn.alice.push_back({i, 1});
  for (std::size_t i : inst.bob) learn.bob.push_back({i, -1});
  LearningOutcome run = learn_halfspace_protocol(ctx, learn);
  for (auto& m : run.transcript.messages) out.transcript.append(std::move(m));
  out.rounds = run.rounds;
  out.certificate = std::move(run.certificate);
  if (run.aborted) {
    out.answer = DisjointnessAnswer::intersecting;
  } else {
    out.separator = std::move(run.classifier);
  }
  return out;
}

PointSet general_position_points(std::size_t d, std::size_t n, std::uint64_t seed, std::int64_t range) {
  for (std::uint64_t attempt = 0; attempt < 64; ++attempt) {
    PointSet pts = random_points(d, n, seed + attempt * 0x9e3779b97f4a7c15ULL, range);
    try {
      enumerate_halfspace_ranges(pts);
      return pts;
    } catch (const DegeneracyError&) {
    }
  }
  throw ResourceError("no general-position draw found in 64 attempts");
}

LearningInstance random_learning_instance(const ProtocolContext& ctx, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = ctx.domain().size();
  const auto& hyps = ctx.hypotheses();
  const ElementSet& target = hyps[std::uniform_int_distribution<std::size_t>(0, hyps.size() - 1)(rng)];
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t k = std::uniform_int_distribution<std::size_t>(0, n)(rng);

  LearningInstance inst{ctx.domain(), {}, {}};
  std::vector<std::size_t> pos, neg;
  for (std::size_t j = 0; j < k; ++j) {
    const std::size_t x = order[j];
    const int label = target.test(x) ? 1 : -1;
    (label > 0 ? pos : neg).push_back(x);
    (rng() & 1 ? inst.alice : inst.bob).push_back({x, label});
  }
  if (exact_hull_intersection(ctx.domain(), pos, neg).intersecting)
    throw InvariantError("generated labels are not separable by a halfspace");
  std::sort(inst.alice.begin(), inst.alice.end(), [](auto& a, auto& b) { return a.index < b.index; });
  std::sort(inst.bob.begin(), inst.bob.end(), [](auto& a, auto& b) { return a.index < b.index; });
  return inst;
}

DisjointnessInstance random_disjointness_instance(const ProtocolContext& ctx, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t n = ctx.domain().size();
  DisjointnessInstance inst{ctx.domain(), {}, {}};
  if (n == 0) return inst;
  const std::size_t max_size = std::max<std::size_t>(1, n / 4);
  std::uniform_int_distribution<std::size_t> size_dist(1, max_size);
  auto draw = [&](std::vector<std::size_t>& out, std::size_t k, const ElementSet* side, bool inside) {
    std::vector<std::size_t> pool;
    for (std::size_t x = 0; x < n; ++x)
      if (!side || side->test(x) == inside) pool.push_back(x);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(std::min(k, pool.size()));
    std::sort(pool.begin(), pool.end());
    out = std::move(pool);
  };
  const std::size_t ka = size_dist(rng), kb = size_dist(rng);
  if (rng() & 1) {
    const auto& hyps = ctx.hypotheses();
    const ElementSet* side = nullptr;
    for (int tries = 0; tries < 64; ++tries) {
      const ElementSet& h = hyps[std::uniform_int_distribution<std::size_t>(0, hyps.size() - 1)(rng)];
      if (!h.empty() && h.count() < n) {
        side = &h;
        break;
      }
    }
    if (side) {
      draw(inst.alice, ka, side, true);
      draw(inst.bob, kb, side, false);
      return inst;
    }
  }
  draw(inst.alice, ka, nullptr, true);
  draw(inst.bob, kb, nullptr, true);
  return inst;
}

}  // namespace bracketkit
