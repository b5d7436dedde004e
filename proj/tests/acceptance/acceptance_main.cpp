// Acceptance suite: one PASS/FAIL line per criterion.
//
//   bracketkit_acceptance [--only 1,3,...] [--expect-fail 6,...]
//
// Exit status is 0 when every criterion passes, or when the failing set is
// exactly the --expect-fail set. Failing criteria are always printed as FAIL.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "bracketkit/constructions.hpp"
#include "bracketkit/errors.hpp"
#include "bracketkit/formulas.hpp"
#include "bracketkit/hull.hpp"
#include "bracketkit/packing.hpp"
#include "bracketkit/property_m.hpp"
#include "bracketkit/protocols.hpp"
#include "bracketkit/verify.hpp"
#include "oracles/oracles.hpp"

using namespace bracketkit;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

// Every provider used anywhere in the run reports its recursion depth here.
struct DepthTally {
  std::size_t providers = 0;
  std::size_t max_depth = 0;
  bool respected = true;
  void note(const PropertyMProvider& p) {
    ++providers;
    max_depth = std::max(max_depth, p.max_depth());
    respected = respected && p.depth_cap_respected();
  }
} g_depth;

// Packings built by any criterion, re-checked exactly in criterion 7.
struct PackingRecord {
  SetSystem system;
  Packing packing;
};
std::vector<PackingRecord> g_packings;

template <class... Args>
std::string fmt(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

oracle::Family fam(const SetSystem& s) { return oracle::to_family(s); }
oracle::Family fam(const std::vector<ElementSet>& s) { return oracle::to_family(s); }

bool oracle_ok(const SetSystem& s, const MnetFamily& m) {
  return oracle::is_mnet(fam(s), s.ground_size(), fam(m.pieces), m.lambda.value(), m.epsilon.value());
}
bool oracle_ok(const SetSystem& s, const ContainerFamily& c) {
  return oracle::is_container(fam(s), s.ground_size(), fam(c.covers), c.epsilon.value());
}
bool oracle_ok(const SetSystem& s, const BracketFamily& b) {
  return oracle::is_bracket(fam(s), s.ground_size(), fam(b.sets), b.epsilon.value());
}

bool verifier_ok(const SetSystem& s, const MnetFamily& m) { return verify_mnet(s, m).passed; }
bool verifier_ok(const SetSystem& s, const ContainerFamily& c) { return verify_container(s, c).passed; }
bool verifier_ok(const SetSystem& s, const BracketFamily& b) { return verify_bracket(s, b).passed; }

std::vector<ElementSet>& sets_of(MnetFamily& m) { return m.pieces; }
std::vector<ElementSet>& sets_of(ContainerFamily& c) { return c.covers; }
std::vector<ElementSet>& sets_of(BracketFamily& b) { return b.sets; }
void drop_hints(MnetFamily&) {}
void drop_hints(ContainerFamily& c) { c.witness.clear(); }
void drop_hints(BracketFamily& b) { b.pairing.clear(); }

SetSystem halfspaces_d2(std::size_t n, std::uint64_t seed) {
  return enumerate_halfspace_ranges(general_position_points(2, n, seed));
}

SetSystem circle(std::size_t n) { return enumerate_halfspace_ranges(lower_bound_instance(2, n, InstanceKind::sphere)); }

// ---------------------------------------------------------------------------
// 1. verifiers against exhaustive re-derivation, with mutations

struct MutationTally {
  std::size_t constructed = 0, constructed_accepted = 0;
  std::size_t mutations = 0, breaking = 0;
  std::size_t false_accepts = 0, false_rejects = 0;
};

template <class Family>
void mutate_and_compare(const SetSystem& s, const Family& built, std::mt19937_64& rng, MutationTally& t) {
  ++t.constructed;
  const bool v0 = verifier_ok(s, built), o0 = oracle_ok(s, built);
  if (v0 && o0) ++t.constructed_accepted;
  if (v0 && !o0) ++t.false_accepts;
  if (!v0 && o0) ++t.false_rejects;

  for (int k = 0; k < 6; ++k) {
    Family f = built;
    auto& sets = sets_of(f);
    if (sets.empty()) break;
    const std::size_t j = rng() % sets.size();
    switch (k % 3) {
      case 0:  // delete a set; hint indices no longer line up
        sets.erase(sets.begin() + static_cast<std::ptrdiff_t>(j));
        drop_hints(f);
        break;
      case 1: {  // remove one element
        auto idx = sets[j].indices();
        if (idx.empty()) continue;
        sets[j].reset(idx[rng() % idx.size()]);
        break;
      }
      default: {  // add one element
        auto idx = sets[j].complement().indices();
        if (idx.empty()) continue;
        sets[j].set(idx[rng() % idx.size()]);
        break;
      }
    }
    ++t.mutations;
    const bool v = verifier_ok(s, f), o = oracle_ok(s, f);
    if (!o) ++t.breaking;
    if (v && !o) ++t.false_accepts;
    if (!v && o) ++t.false_rejects;
  }
}

Outcome criterion1() {
  const auto t0 = Clock::now();
  MutationTally t;
  for (std::uint64_t i = 0; i < 200; ++i) {
    const std::size_t d = 1 + i % 2;
    const int family = static_cast<int>(i % 3);
    std::size_t n = 6 + (i * 7) % 19;
    if (family == 1 && d == 2) n = std::min<std::size_t>(n, 16);
    SetSystem s;
    if (family == 0)
      s = enumerate_halfspace_ranges(general_position_points(d, n, 1000 + i));
    else if (family == 1)
      s = enumerate_ball_ranges(general_position_points(d, n, 1000 + i));
    else
      s = enumerate_box_ranges(random_points(d, n, 1000 + i, 6));

    const Fraction eps = (i / 3) % 2 == 0 ? Fraction(1, 4) : Fraction(1, 2);
    PropertyMProvider p, pc;
    const MnetFamily m = i % 4 == 0 ? heavy_mnet(s, Fraction(3, 4), eps, p).mnet : base_mnet(s, Fraction(1, 2), eps);
    const ContainerFamily c = build_container(s, eps, pc);
    const BracketFamily b = build_bracket(s, eps, p, pc);
    g_depth.note(p);
    g_depth.note(pc);

    std::mt19937_64 rng(i);
    mutate_and_compare(s, m, rng, t);
    mutate_and_compare(s, c, rng, t);
    mutate_and_compare(s, b, rng, t);
  }
  const double secs = seconds_since(t0);
  Outcome o;
  o.pass = t.false_accepts == 0 && t.false_rejects == 0 && t.constructed_accepted == t.constructed && secs < 120;
  o.detail = fmt("200 instances, %zu/%zu constructed families accepted, %zu mutations (%zu breaking), "
                 "%zu false accepts, %zu false rejects, %.1fs (limit 120s)",
                 t.constructed_accepted, t.constructed, t.mutations, t.breaking, t.false_accepts, t.false_rejects,
                 secs);
  return o;
}

// ---------------------------------------------------------------------------
// 2. duality between Mnets of complements and containers of small ranges

Outcome criterion2() {
  const Fraction deltas[] = {Fraction(1, 8), Fraction(1, 5), Fraction(1, 4)};
  const Fraction lambdas[] = {Fraction(3, 4), Fraction(4, 5), Fraction(1)};
  std::size_t inputs = 0, container_ok = 0, mnet_ok = 0, size_ok = 0, round_trip_ok = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    const Fraction delta0 = deltas[i % 3];
    const Fraction lambda = lambdas[(i / 3) % 3];
    const std::size_t d = 1 + i % 2;
    const std::size_t n = 8 + (i * 5) % 13;
    const SetSystem s = i % 5 == 4 ? enumerate_ball_ranges(general_position_points(d, n, 2000 + i))
                                   : enumerate_halfspace_ranges(general_position_points(d, n, 2000 + i));
    const Fraction nf(static_cast<std::int64_t>(n));
    const SetSystem small = filter_by_size(s, SizeInterval::at_most(delta0 * nf));
    ++inputs;

    // (a) Mnet of complements -> container at exactly 1 - lambda + lambda delta0.
    const MnetFamily m = base_mnet(complement_family(small), lambda, Fraction(1) - delta0);
    const ContainerOnSubfamily c = mnet_to_container(s, m, delta0, lambda);
    const Fraction expect_eps = Fraction(1) - lambda + lambda * delta0;
    if (c.container.epsilon == expect_eps && c.system == small && verify_container(small, c.container).passed &&
        oracle_ok(small, c.container))
      ++container_ok;

    // (b) (1 - lambda)-container of the small ranges -> Mnet of complements.
    ContainerFamily base;
    if (lambda == Fraction(1)) {
      base = ContainerFamily{n, std::vector<ElementSet>(small.begin(), small.end()), Fraction(0), {}};
    } else {
      PropertyMProvider pc;
      base = build_container(small, Fraction(1) - lambda, pc);
      g_depth.note(pc);
    }
    const MnetOnSubfamily back = container_to_mnet(s, base, delta0, lambda);
    const SetSystem comp = complement_family(small);
    if (back.mnet.lambda == lambda - delta0 && back.mnet.epsilon == Fraction(1) - delta0 &&
        verify_mnet(comp, back.mnet).passed && oracle_ok(comp, back.mnet))
      ++mnet_ok;
    // Every complement range contains a piece with at least (lambda - delta0) n elements.
    bool sizes = true;
    for (const auto& r : comp) {
      bool found = false;
      for (const auto& piece : back.mnet.pieces)
        if (piece.is_subset_of(r) && count_at_least(piece.count(), lambda - delta0, n)) found = true;
      sizes = sizes && found;
    }
    if (sizes) ++size_ok;

    // (c) double complement: container_to_mnet(mnet_to_container(M)) has M's pieces.
    const MnetOnSubfamily trip = container_to_mnet(s, c.container, delta0, lambda * (Fraction(1) - delta0));
    if (trip.mnet.pieces == m.pieces) ++round_trip_ok;
  }
  Outcome o;
  o.pass = container_ok == inputs && mnet_ok == inputs && size_ok == inputs && round_trip_ok == inputs;
  o.detail = fmt("%zu inputs: container at 1-l+l*d0 %zu, Mnet at l-d0 %zu, piece size >= (l-d0)n %zu, "
                 "round trip %zu",
                 inputs, container_ok, mnet_ok, size_ok, round_trip_ok);
  return o;
}

// ---------------------------------------------------------------------------
// 3. boosting epsilon

std::vector<std::pair<std::string, SetSystem>> forty_point_instances() {
  std::vector<std::pair<std::string, SetSystem>> out;
  for (std::uint64_t seed : {1u, 2u, 3u}) out.emplace_back("random-s" + std::to_string(seed), halfspaces_d2(40, seed));
  out.emplace_back("circle", circle(40));
  return out;
}

Outcome criterion3() {
  std::size_t runs = 0, verified = 0, formulas_ok = 0;
  std::string first_problem;
  for (const auto& [name, s] : forty_point_instances()) {
    for (const Fraction eps : {Fraction(1, 5), Fraction(3, 10)}) {
      const Fraction eta(1, 2);
      PropertyMProvider p;
      const BoostResult r = boost_epsilon(s, p, eps, eta);
      g_depth.note(p);
      ++runs;
      const Fraction target = Fraction(1, 2) * (Fraction(1) - eta);
      if (r.mnet.lambda == target && target == Fraction(1, 4) && r.mnet.epsilon == eps && verify_mnet(s, r.mnet).passed &&
          oracle_ok(s, r.mnet))
        ++verified;

      // Recompute every logged quantity independently.
      const Fraction half_eta = eta / Fraction(2);
      const Fraction eta_p = half_eta < Fraction(1, 4) ? half_eta : Fraction(1, 4);
      std::size_t t = 0;
      for (Fraction x = eps; x < Fraction(1); x = x * (Fraction(1) + eta_p)) ++t;
      std::vector<std::string> expect;
      expect.push_back("eta' = min(1/4, eta/2) = min(1/4, " + half_eta.str() + ") = " + eta_p.str());
      expect.push_back("t = ceil(log(1/eps) / log(1 + eta')) = " + std::to_string(t));
      bool ok = r.eta_prime == eta_p && r.t == t && r.log.size() == r.bands.size() + 2;
      Fraction eps_i = eps;
      for (std::size_t i = 0; ok && i < r.bands.size(); ++i) {
        const BoostBand& b = r.bands[i];
        eps_i = eps_i * (Fraction(1) + eta_p);
        const Fraction delta_i = eta_p * eps_i;
        ok = b.index == i + 1 && b.eps_i == eps_i && b.delta_i == delta_i && b.threshold == delta_i.floor_mul(40) &&
             b.size_limit == eps_i.ceil_mul(40) - 1;
        expect.push_back("i = " + std::to_string(i + 1) + ": eps_i = (1 + eta')^i eps = " + eps_i.str() +
                         ", delta_i = eta' eps_i = " + delta_i.str() +
                         ", packing distance floor(delta_i n) = " + std::to_string(delta_i.floor_mul(40)) +
                         ", members |R| < eps_i n: " + std::to_string(b.packing_size) +
                         ", pieces: " + std::to_string(b.piece_count));
      }
      // Bands stop at the first eps_i above one.
      ok = ok && !r.bands.empty() && r.bands.back().eps_i > Fraction(1) &&
           (r.bands.size() < 2 || r.bands[r.bands.size() - 2].eps_i <= Fraction(1));
      ok = ok && expect == r.log;
      if (ok)
        ++formulas_ok;
      else if (first_problem.empty())
        first_problem = name + " eps=" + eps.str();
    }
  }
  Outcome o;
  o.pass = verified == runs && formulas_ok == runs;
  o.detail = fmt("%zu runs (n=40, eps in {1/5,3/10}, eta=1/2): verified at lambda(1-eta)=1/4 %zu, "
                 "log matches recomputed eta'/t/bands %zu",
                 runs, verified, formulas_ok);
  if (!first_problem.empty()) o.detail += "; first mismatch " + first_problem;
  return o;
}

// ---------------------------------------------------------------------------
// 4. heavy Mnets beyond one half

Outcome criterion4() {
  std::size_t runs = 0, verified = 0;
  double worst = 0.0;
  std::string sizes;
  for (const auto& [name, s] : forty_point_instances()) {
    for (const Fraction lambda : {Fraction(3, 5), Fraction(3, 4), Fraction(9, 10)}) {
      const auto t0 = Clock::now();
      PropertyMProvider p;
      const HeavyMnetResult r = heavy_mnet(s, lambda, Fraction(1, 4), p);
      g_depth.note(p);
      const double secs = seconds_since(t0);
      worst = std::max(worst, secs);
      ++runs;
      if (r.mnet.lambda == lambda && r.mnet.epsilon == Fraction(1, 4) && verify_mnet(s, r.mnet).passed &&
          oracle_ok(s, r.mnet) && secs < 300)
        ++verified;
      if (name == "circle") sizes += (sizes.empty() ? "" : "/") + std::to_string(r.mnet.size());
    }
  }
  Outcome o;
  o.pass = verified == runs;
  o.detail = fmt("%zu runs (n=40, lambda in {3/5,3/4,9/10}, eta=1/4): %zu verified, slowest %.1fs (limit 300s), "
                 "circle sizes %s",
                 runs, verified, worst, sizes.c_str());
  return o;
}

// ---------------------------------------------------------------------------
// 5. containers and brackets

Outcome criterion5() {
  std::vector<std::pair<std::string, SetSystem>> instances = forty_point_instances();
  instances.emplace_back("ball-24", enumerate_ball_ranges(general_position_points(2, 24, 5)));
  instances.emplace_back("box-30", enumerate_box_ranges(random_points(2, 30, 6, 1000)));
  instances.emplace_back("line-30", enumerate_halfspace_ranges(general_position_points(1, 30, 7)));
  instances.emplace_back("space-16", enumerate_halfspace_ranges(general_position_points(3, 16, 8)));

  std::size_t runs = 0, ok = 0;
  double tightest = INFINITY;
  for (const auto& [name, s] : instances) {
    const std::size_t d0 = vc_dimension_exact(s).dimension;
    for (const Fraction eps : {Fraction(1, 4), Fraction(1, 2)}) {
      PropertyMProvider p, pc;
      const ContainerFamily c = build_container(s, eps, pc);
      const BracketFamily b = build_bracket(s, eps, p, pc);
      g_depth.note(p);
      g_depth.note(pc);
      const double ceiling = std::pow(2.0 / eps.to_double(), 7.03 * static_cast<double>(d0));
      ++runs;
      const bool good = verify_container(s, c).passed && oracle_ok(s, c) && verify_bracket(s, b).passed &&
                        oracle_ok(s, b) && static_cast<double>(c.size()) <= ceiling &&
                        c.size() >= container_lower_bound(s, eps);
      if (good) ++ok;
      tightest = std::min(tightest, ceiling / static_cast<double>(std::max<std::size_t>(c.size(), 1)));
    }
  }
  Outcome o;
  o.pass = ok == runs;
  o.detail = fmt("%zu runs on %zu instances, eps in {1/4,1/2}: %zu containers and brackets verified within "
                 "(2/eps)^(7.03 d0), smallest margin %.3g",
                 runs, instances.size(), ok, tightest);
  return o;
}

// ---------------------------------------------------------------------------
// 6. lower vs upper bound on the circle

Outcome criterion6() {
  const SetSystem s = circle(60);
  std::size_t lower[2], upper[2];
  const Fraction eps[2] = {Fraction(1, 10), Fraction(1, 20)};
  bool verified = true;
  for (int k = 0; k < 2; ++k) {
    lower[k] = container_lower_bound(s, eps[k]);
    PropertyMProvider pc;
    const ContainerFamily c = build_container(s, eps[k], pc);
    g_depth.note(pc);
    verified = verified && verify_container(s, c).passed;
    upper[k] = c.size();
  }
  const double ratio = static_cast<double>(lower[1]) / static_cast<double>(lower[0]);
  Outcome o;
  o.pass = verified && lower[0] <= upper[0] && lower[1] <= upper[1] && ratio >= 1.5 && ratio <= 2.5;
  o.detail = fmt("circle n=60: eps=1/10 lower %zu upper %zu, eps=1/20 lower %zu upper %zu, "
                 "lower-bound ratio %.2f (required [1.5, 2.5])",
                 lower[0], upper[0], lower[1], upper[1], ratio);
  return o;
}

// ---------------------------------------------------------------------------
// 7. packings

Outcome criterion7() {
  // Haussler constant ladder at delta = n/4 for d = 2 halfspaces (d0 = 3).
  std::vector<double> c_hat;
  std::string ladder;
  for (std::size_t n : {10u, 20u, 40u, 80u}) {
    const SetSystem s = halfspaces_d2(n, 11);
    const Packing p = greedy_delta_packing(s, n / 4);
    const auto rep = packing_bound_report(s, p, 3);
    c_hat.push_back(rep.c_hat);
    ladder += fmt("%s%zu:%.3f", ladder.empty() ? "" : " ", n, rep.c_hat);
    g_packings.push_back({s, p});
    g_packings.push_back({s, greedy_delta_packing(s, n / 8, n / 2)});
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t n = 8 + seed;
    const SetSystem s = seed % 2 == 0 ? enumerate_ball_ranges(general_position_points(2, n, 3000 + seed))
                                      : enumerate_box_ranges(random_points(2, n, 3000 + seed, 20));
    g_packings.push_back({s, greedy_delta_packing(s, 1 + seed % 5)});
    g_packings.push_back({s, greedy_delta_packing(s, 1 + seed % 3, n / 3)});
  }

  std::size_t pair_violations = 0, nn_violations = 0, not_greedy = 0, checked_ranges = 0;
  for (const auto& [s, p] : g_packings) {
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        if (oracle::sym_diff(oracle::to_set(p.members[i]), oracle::to_set(p.members[j])) <= p.delta) ++pair_violations;
    for (const auto& r : s) {
      if (p.shallow_cap && r.count() > *p.shallow_cap) continue;
      ++checked_ranges;
      std::size_t best = SIZE_MAX;
      for (const auto& m : p.members) best = std::min(best, oracle::sym_diff(oracle::to_set(r), oracle::to_set(m)));
      if (best > p.delta) ++nn_violations;
    }
    if (oracle::to_family(p.members) != oracle::greedy_packing(fam(s), p.delta, p.shallow_cap)) ++not_greedy;
  }
  const double bound = 1.5 * c_hat.front();
  const bool bounded = std::all_of(c_hat.begin(), c_hat.end(), [&](double c) { return c <= bound; });
  Outcome o;
  o.pass = pair_violations == 0 && nn_violations == 0 && not_greedy == 0 && bounded;
  o.detail = fmt("%zu packings: %zu pairwise violations, %zu of %zu in-cap ranges beyond delta, %zu differ from "
                 "reference greedy; c_hat(n) %s, all <= 1.5 c_hat(10)",
                 g_packings.size(), pair_violations, nn_violations, checked_ranges, not_greedy, ladder.c_str());
  if (!bounded) o.detail += " [exceeded]";
  return o;
}

// ---------------------------------------------------------------------------
// 8. Sauer-Shelah on projections, VC of complements

Outcome criterion8() {
  std::size_t systems = 0, projections = 0, violations = 0, complement_mismatch = 0, oracle_mismatch = 0;
  for (std::uint64_t i = 0; i < 60; ++i) {
    const std::size_t d = 1 + i % 3;
    const std::size_t n = 6 + i % 12;
    SetSystem s;
    switch (i % 3) {
      case 0: s = enumerate_halfspace_ranges(general_position_points(d, n, 4000 + i)); break;
      case 1: s = enumerate_ball_ranges(general_position_points(d, n, 4000 + i)); break;
      default: s = enumerate_box_ranges(random_points(d, n, 4000 + i, 10)); break;
    }
    const VcDimension vc = vc_dimension_exact(s);
    if (vc.at_least) continue;
    ++systems;
    if (vc.dimension != vc_dimension_exact(complement_family(s)).dimension) ++complement_mismatch;
    if (n <= 12 && vc.dimension != oracle::vc_dimension(fam(s), n)) ++oracle_mismatch;
    if (!sauer_shelah_check(s, vc.dimension).passed) ++violations;
    std::mt19937_64 rng(i);
    for (int k = 0; k < 10; ++k) {
      std::vector<std::size_t> y;
      for (std::size_t e = 0; e < n; ++e)
        if (rng() % 2) y.push_back(e);
      const Projection proj = project(s, y);
      ++projections;
      if (static_cast<double>(proj.system.size()) > oracle::binomial_sum(y.size(), vc.dimension)) ++violations;
    }
  }
  Outcome o;
  o.pass = systems > 0 && violations == 0 && complement_mismatch == 0 && oracle_mismatch == 0;
  o.detail = fmt("%zu systems, %zu projections: %zu bound violations, %zu VC(S) != VC(complement), "
                 "%zu disagreements with exhaustive VC",
                 systems, projections, violations, complement_mismatch, oracle_mismatch);
  return o;
}

// ---------------------------------------------------------------------------
// 9. protocols

std::size_t median(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v[v.size() / 2];
}

Outcome criterion9() {
  const auto t0 = Clock::now();
  std::size_t learn_runs = 0, consistent = 0, deterministic = 0;
  std::size_t disj_runs = 0, agree = 0, ladder_inconsistent = 0;
  std::vector<std::size_t> bits64;
  for (std::uint64_t dom = 0; dom < 10; ++dom) {
    const ProtocolContext ctx(general_position_points(2, 64, 5000 + dom));
    for (std::uint64_t k = 0; k < 50; ++k) {
      const LearningInstance inst = random_learning_instance(ctx, dom * 1000 + k);
      const LearningOutcome a = learn_halfspace_protocol(ctx, inst);
      const LearningOutcome b = learn_halfspace_protocol(ctx, inst);
      ++learn_runs;
      bool ok = !a.aborted && a.consistent;
      for (const auto* side : {&inst.alice, &inst.bob})
        for (const auto& ex : *side) ok = ok && a.classifier.test(ex.index) == (ex.label > 0);
      if (ok) ++consistent;
      if (a.transcript == b.transcript && a.transcript.to_jsonl() == b.transcript.to_jsonl()) ++deterministic;
      bits64.push_back(a.transcript.total_bits);

      const DisjointnessInstance di = random_disjointness_instance(ctx, dom * 1000 + k);
      const DisjointnessOutcome out = convex_disjointness_protocol(ctx, di);
      const HullIntersection h = exact_hull_intersection(ctx.domain(), di.alice, di.bob);
      const bool sep = oracle::separable(ctx.domain(), di.alice, di.bob);
      bool match = (out.answer == DisjointnessAnswer::intersecting) == h.intersecting && h.intersecting == !sep;
      if (match && out.separator) {
        for (auto i : di.alice) match = match && out.separator->test(i);
        for (auto i : di.bob) match = match && !out.separator->test(i);
      }
      ++disj_runs;
      if (match) ++agree;
    }
  }

  std::map<std::size_t, std::size_t> med;
  med[64] = median(bits64);
  for (std::size_t n : {16u, 256u}) {
    const ProtocolContext ctx(general_position_points(2, n, 6000 + n));
    std::vector<std::size_t> bits;
    for (std::uint64_t k = 0; k < 100; ++k) {
      const LearningInstance inst = random_learning_instance(ctx, k);
      const LearningOutcome a = learn_halfspace_protocol(ctx, inst);
      if (!a.consistent) ++ladder_inconsistent;
      bits.push_back(a.transcript.total_bits);
    }
    med[n] = median(bits);
  }
  const double r1 = static_cast<double>(med[256]) / static_cast<double>(med[16]);
  const double r2 = static_cast<double>(med[256]) / static_cast<double>(med[64]);
  const bool sublinear = r1 < 16.0 && r2 < 4.0;
  const double secs = seconds_since(t0);
  Outcome o;
  o.pass = consistent == 500 && learn_runs == 500 && ladder_inconsistent == 0 && deterministic == 500 && agree == 500 && disj_runs == 500 &&
           sublinear && secs < 600;
  o.detail = fmt("learning %zu/500 consistent, %zu/500 deterministic; disjointness %zu/%zu agree with exact hull "
                 "test; median bits n=16:%zu n=64:%zu n=256:%zu (ratios %.2f < 16, %.2f < 4), %zu inconsistent in the "
                 "n=16/256 runs; %.1fs (limit 600s)",
                 consistent, deterministic, agree, disj_runs, med[16], med[64], med[256], r1, r2, ladder_inconsistent, secs);
  return o;
}

// ---------------------------------------------------------------------------
// 10. formula spot checks and the recursion depth cap

Outcome criterion10() {
  bool ok = true;
  std::string notes;
  auto check = [&](bool cond, const char* what) {
    if (!cond) {
      ok = false;
      notes += std::string(notes.empty() ? "" : ", ") + what;
    }
  };
  check(formulas::bootstrap_eps_prime(Fraction(1, 2)) == Fraction(1, 2), "eps'(1/2)");
  check(formulas::bootstrap_eps_prime(Fraction(1, 5)) == Fraction(1, 4), "eps'(1/5)");
  for (const Fraction lambda : {Fraction(1, 2), Fraction(3, 5), Fraction(3, 4), Fraction(9, 10)}) {
    check(formulas::heavy_eps0(lambda) == (Fraction(1) - lambda) / Fraction(4), "eps0");
    check(heavy_mnet_params(lambda, Fraction(1, 4), Fraction(1, 2)).eps0 == (Fraction(1) - lambda) / Fraction(4),
          "params eps0");
  }
  const double t0 = formulas::heavy_t0(Fraction(1, 2), Fraction(1, 2));
  const double t0_ref = 1.0 + std::log(8.0) / std::log(4.0 / 3.0);
  check(std::fabs(t0 - t0_ref) <= 1e-9, "t0");
  check(heavy_mnet_params(Fraction(1, 2), Fraction(1, 4), Fraction(1, 2)).t0_ceil == 9, "t0 ceiling");
  check(formulas::small_set_depth_cap(Fraction(1, 4), Fraction(1, 2)) == 6, "depth cap(1/4)");

  // Exercise the small-set recursion directly on every eps that appears in the suite.
  std::size_t direct_runs = 0;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const SetSystem s = halfspaces_d2(30, 7000 + seed);
    for (const Fraction eps : {Fraction(1, 8), Fraction(1, 4), Fraction(1, 2)}) {
      const SetSystem small = filter_by_size(s, SizeInterval::at_most(eps * Fraction(30)));
      PropertyMProvider p;
      const SmallSetResult r = small_set_container(small, eps, eps, p);
      g_depth.note(p);
      ++direct_runs;
      check(r.depth_cap == formulas::small_set_depth_cap(eps, Fraction(1, 2)), "reported cap");
      check(r.max_depth <= r.depth_cap, "branch depth");
    }
  }
  check(g_depth.respected, "provider depth cap");
  Outcome o;
  o.pass = ok;
  o.detail = fmt("eps'(1/2)=1/2, eps'(1/5)=1/4, eps0=(1-l)/4, t0=%.12f vs %.12f, cap(1/4,1/2)=6; depth cap "
                 "respected across %zu providers (max depth %zu) and %zu direct runs",
                 t0, t0_ref, g_depth.providers, g_depth.max_depth, direct_runs);
  if (!ok) o.detail += "; failed: " + notes;
  return o;
}

std::set<int> parse_list(const char* text) {
  std::set<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.insert(std::stoi(item));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only, expect_fail;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc)
      only = parse_list(argv[++i]);
    else if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc)
      expect_fail = parse_list(argv[++i]);
    else {
      std::cerr << "usage: bracketkit_acceptance [--only 1,2,...] [--expect-fail 6,...]\n";
      return 2;
    }
  }

  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"definition verifiers vs exhaustive check", criterion1},
      {"Mnet/container duality", criterion2},
      {"epsilon boosting", criterion3},
      {"heavy Mnets beyond 1/2", criterion4},
      {"containers and brackets", criterion5},
      {"lower vs upper bound on the circle", criterion6},
      {"packings", criterion7},
      {"Sauer-Shelah and complements", criterion8},
      {"two-party protocols", criterion9},
      {"formula spot checks and depth cap", criterion10},
  };

  std::set<int> failed;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k + 1);
    if (!only.empty() && !only.count(id)) continue;
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) failed.insert(id);
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << criteria[k].first << ": "
              << o.detail << fmt(" [%.1fs]", seconds_since(t0)) << std::endl;
  }

  std::set<int> expected;
  for (int id : expect_fail)
    if (only.empty() || only.count(id)) expected.insert(id);
  if (failed.empty()) {
    std::cout << "all criteria passed\n";
    return 0;
  }
  std::string list;
  for (int id : failed) list += (list.empty() ? "" : ",") + std::to_string(id);
  if (failed == expected) {
    std::cout << "failed: " << list << " (all listed as expected failures)\n";
    return 0;
  }
  std::cout << "failed: " << list << "\n";
  return 1;
}
