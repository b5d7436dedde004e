#include "bracketkit/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "bracketkit/errors.hpp"
#include "bracketkit/formulas.hpp"
#include "bracketkit/packing.hpp"
#include "bracketkit/verify.hpp"

namespace bracketkit {

namespace {

void require_open_unit(const Fraction& f, const char* name) {
  if (!f.is_positive() || f >= Fraction(1))
    throw ParameterError(std::string(name) + " must lie in (0, 1), got " + f.str());
}

void ensure(const VerifyReport& report, const std::string& what) {
  if (!report.passed)
    throw InvariantError(what + " failed verification at range " +
                         std::to_string(report.counterexample->range_index) + ": " + report.counterexample->reason);
}

std::int64_t n_of(const SetSystem& s) { return static_cast<std::int64_t>(s.ground_size()); }

/// Appends sets while dropping repeats; returns the index of each insert.
class SetPool {
 public:
  std::size_t add(const ElementSet& s) {
    auto [it, inserted] = index_.emplace(s, sets_.size());
    if (inserted) sets_.push_back(s);
    return it->second;
  }
  std::vector<ElementSet> take() { return std::move(sets_); }
  const std::vector<ElementSet>& sets() const { return sets_; }

 private:
  std::vector<ElementSet> sets_;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> index_;
};

/// First piece inside `range` with at least lambda |range| elements.
std::optional<std::size_t> heavy_piece_in(const std::vector<ElementSet>& pieces, const ElementSet& range,
                                          const Fraction& lambda) {
  const auto need = lambda.ceil_mul(static_cast<std::int64_t>(range.count()));
  for (std::size_t j = 0; j < pieces.size(); ++j)
    if (static_cast<std::int64_t>(pieces[j].count()) >= need && pieces[j].is_subset_of(range)) return j;
  return std::nullopt;
}

MnetFamily bootstrap_unchecked(const SetSystem& system, const Fraction& epsilon, const Fraction& delta,
                               PropertyMProvider& provider) {
  const std::int64_t n = n_of(system);
  const Fraction nf(n);
  const SetSystem band = filter_by_size(system, SizeInterval::closed(delta * nf, (Fraction(1) + epsilon) * delta * nf));
  const std::int64_t radius = (epsilon * delta).floor_mul(n);
  const Packing packing = greedy_delta_packing(band, static_cast<std::size_t>(radius));
  const Fraction eps_prime = formulas::bootstrap_eps_prime(epsilon);

  SetPool pieces;
  for (const ElementSet& p : packing.members) {
    std::vector<ElementSet> residues;
    for (const ElementSet& a : band)
      if (static_cast<std::int64_t>(sym_diff_size(a, p)) <= radius) residues.push_back(difference(p, a));
    const Projection local = project(SetSystem(system.ground_size(), std::move(residues)), p);
    const auto limit = eps_prime.floor_mul(static_cast<std::int64_t>(p.count()));
    for (const auto& r : local.system)
      if (static_cast<std::int64_t>(r.count()) > limit)
        throw InvariantError("bootstrap group residue exceeds eps' |P|");
    const SmallSetResult inner = small_set_container(local.system, eps_prime, epsilon, provider);
    for (const auto& c : inner.container.covers) pieces.add(difference(p, local.lift(c, system.ground_size())));
  }
  MnetFamily out{system.ground_size(), pieces.take(), Fraction(1) - Fraction(4) * epsilon, delta};
  ensure(verify_mnet(band, out), "bootstrap Mnet");
  return out;
}

}  // namespace

BoostResult boost_epsilon(const SetSystem& system, PropertyMProvider& provider, const Fraction& epsilon,
                          const Fraction& eta) {
  require_open_unit(epsilon, "epsilon");
  require_open_unit(eta, "eta");
  const std::int64_t n = n_of(system);
  BoostResult res;
  res.eta = eta;
  res.eta_prime = formulas::boost_eta_prime(eta);
  res.t = formulas::boost_band_count(epsilon, res.eta_prime);
  res.log.push_back("eta' = min(1/4, eta/2) = min(1/4, " + (eta / Fraction(2)).str() + ") = " + res.eta_prime.str());
  res.log.push_back("t = ceil(log(1/eps) / log(1 + eta')) = " + std::to_string(res.t));

  const Fraction growth = Fraction(1) + res.eta_prime;
  SetPool pieces;
  Fraction eps_prev = epsilon;
  for (std::size_t i = 1;; ++i) {
    BoostBand band;
    band.index = i;
    band.eps_i = eps_prev * growth;
    band.delta_i = res.eta_prime * band.eps_i;
    band.threshold = band.delta_i.floor_mul(n);
    band.size_limit = band.eps_i.ceil_mul(n) - 1;
    const std::int64_t band_lo = eps_prev.ceil_mul(n);
    const bool occupied = std::any_of(system.begin(), system.end(), [&](const ElementSet& r) {
      const auto c = static_cast<std::int64_t>(r.count());
      return c >= band_lo && c <= band.size_limit;
    });
    if (occupied) {
      const SetSystem shallow = filter_by_size(system, SizeInterval::at_most(Fraction(std::max<std::int64_t>(band.size_limit, 0))));
      const Packing packing = band.size_limit < 0 ? Packing{} : greedy_delta_packing(shallow, static_cast<std::size_t>(band.threshold));
      band.packing_size = packing.size();
      for (const ElementSet& p : packing.members) {
        const Projection local = project(system, p);
        const MnetFamily m = provider.mnet(local.system, Fraction(1, 2));
        for (const auto& piece : m.pieces) {
          pieces.add(local.lift(piece, system.ground_size()));
          ++band.piece_count;
        }
      }
    }
    res.log.push_back("i = " + std::to_string(i) + ": eps_i = (1 + eta')^i eps = " + band.eps_i.str() +
                      ", delta_i = eta' eps_i = " + band.delta_i.str() + ", packing distance floor(delta_i n) = " +
                      std::to_string(band.threshold) + ", members |R| < eps_i n: " + std::to_string(band.packing_size) +
                      ", pieces: " + std::to_string(band.piece_count));
    res.bands.push_back(band);
    eps_prev = band.eps_i;
    if (eps_prev > Fraction(1)) break;
  }
  res.mnet = MnetFamily{system.ground_size(), pieces.take(), provider.Lambda() * (Fraction(1) - eta), epsilon};
  ensure(verify_mnet(system, res.mnet), "boosted Mnet");
  return res;
}

ContainerOnSubfamily mnet_to_container(const SetSystem& system, const MnetFamily& mnet, const Fraction& delta0,
                                       const Fraction& lambda) {
  if (delta0 < Fraction(0) || delta0 >= Fraction(1)) throw ParameterError("delta0 must lie in [0, 1)");
  if (!lambda.is_positive() || lambda > Fraction(1)) throw ParameterError("lambda must lie in (0, 1]");
  if (mnet.ground_size != system.ground_size()) throw InputError("Mnet over a different ground set");
  const std::int64_t n = n_of(system);
  SetSystem small = filter_by_size(system, SizeInterval::at_most(delta0 * Fraction(n)));
  const SetSystem comp = complement_family(small);
  const VerifyReport pre = verify_mnet(comp, MnetFamily{mnet.ground_size, mnet.pieces, lambda, Fraction(1) - delta0});
  if (!pre.passed)
    throw InputError("not a " + lambda.str() + "-heavy " + (Fraction(1) - delta0).str() +
                     "-Mnet of the complements; counterexample " +
                     std::to_string(pre.counterexample->range_index) + ": " + pre.counterexample->reason);

  ContainerFamily out;
  out.ground_size = system.ground_size();
  out.epsilon = Fraction(1) - lambda + lambda * delta0;
  for (const auto& m : mnet.pieces) out.covers.push_back(m.complement());
  out.witness.resize(small.size());
  for (std::size_t i = 0; i < small.size(); ++i)
    if (auto j = heavy_piece_in(mnet.pieces, small[i].complement(), lambda)) out.witness[i] = *j;
  ensure(verify_container(small, out), "dual container");
  return {std::move(small), std::move(out)};
}

MnetOnSubfamily container_to_mnet(const SetSystem& system, const ContainerFamily& container, const Fraction& delta0,
                                  const Fraction& lambda) {
  if (delta0 < Fraction(0) || delta0 >= Fraction(1)) throw ParameterError("delta0 must lie in [0, 1)");
  if (!lambda.is_positive() || lambda > Fraction(1)) throw ParameterError("lambda must lie in (0, 1]");
  if (lambda <= delta0) throw ParameterError("lambda must exceed delta0, got " + lambda.str() + " <= " + delta0.str());
  if (container.ground_size != system.ground_size()) throw InputError("container over a different ground set");
  const std::int64_t n = n_of(system);
  const SetSystem small = filter_by_size(system, SizeInterval::at_most(delta0 * Fraction(n)));
  const VerifyReport pre =
      verify_container(small, ContainerFamily{container.ground_size, container.covers, Fraction(1) - lambda, {}});
  if (!pre.passed)
    throw InputError("not a " + (Fraction(1) - lambda).str() + "-container of the small ranges; counterexample " +
                     std::to_string(pre.counterexample->range_index) + ": " + pre.counterexample->reason);

  MnetOnSubfamily out{complement_family(small), {}};
  out.mnet.ground_size = system.ground_size();
  out.mnet.lambda = lambda - delta0;
  out.mnet.epsilon = Fraction(1) - delta0;
  for (const auto& c : container.covers) out.mnet.pieces.push_back(c.complement());
  ensure(verify_mnet(out.system, out.mnet), "dual Mnet");
  return out;
}

SmallSetResult small_set_container(const SetSystem& system, const Fraction& epsilon, const Fraction& rho,
                                   PropertyMProvider& provider) {
  require_open_unit(epsilon, "epsilon");
  if (!rho.is_positive() || rho > epsilon) throw ParameterError("rho must lie in (0, epsilon], got " + rho.str());
  const std::int64_t n = n_of(system);
  const std::int64_t small = epsilon.floor_mul(n);
  for (const auto& r : system)
    if (static_cast<std::int64_t>(r.count()) > small)
      throw InputError("small-set container input has a range with " + std::to_string(r.count()) +
                       " > eps n elements");

  SmallSetResult res;
  res.depth_cap = formulas::small_set_depth_cap(epsilon, provider.Lambda());
  const auto rho_n = static_cast<std::size_t>(rho.floor_mul(n));
  SetPool covers;
  std::vector<std::optional<std::size_t>> witness(system.size());

  struct Node {
    ElementSet z;
    std::vector<std::size_t> members;
    std::size_t depth;
  };
  std::vector<Node> stack;
  if (!system.empty()) {
    std::vector<std::size_t> all(system.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    stack.push_back({ElementSet::full(system.ground_size()), std::move(all), 0});
  }
  while (!stack.empty()) {
    Node node = std::move(stack.back());
    stack.pop_back();
    ++res.nodes;
    res.max_depth = std::max(res.max_depth, node.depth);
    std::vector<std::size_t> active;
    std::vector<ElementSet> residues;
    std::size_t min_residue = node.z.count();
    for (std::size_t i : node.members) {
      ElementSet residue = difference(node.z, system[i]);
      const std::size_t c = residue.count();
      if (c <= rho_n) {
        witness[i] = covers.add(node.z);
      } else {
        active.push_back(i);
        min_residue = std::min(min_residue, c);
        residues.push_back(std::move(residue));
      }
    }
    if (active.empty()) continue;
    if (node.depth + 1 > res.depth_cap) {
      provider.record_depth(node.depth + 1, res.depth_cap);
      throw InvariantError("small-set recursion exceeded its depth cap of " + std::to_string(res.depth_cap));
    }

    const Projection local = project(SetSystem(system.ground_size(), residues), node.z);
    const MnetFamily m = provider.mnet(local.system, Fraction(static_cast<std::int64_t>(min_residue),
                                                              static_cast<std::int64_t>(node.z.count())));
    std::vector<ElementSet> pieces;
    pieces.reserve(m.pieces.size());
    for (const auto& p : m.pieces) pieces.push_back(local.lift(p, system.ground_size()));

    std::vector<std::vector<std::size_t>> routed(pieces.size());
    for (std::size_t k = 0; k < active.size(); ++k) {
      const auto j = heavy_piece_in(pieces, residues[k], provider.Lambda());
      if (!j) throw InvariantError("provider Mnet left a residue unserved");
      routed[*j].push_back(active[k]);
    }
    for (std::size_t j = pieces.size(); j-- > 0;)
      if (!routed[j].empty()) stack.push_back({difference(node.z, pieces[j]), std::move(routed[j]), node.depth + 1});
  }
  provider.record_depth(res.max_depth, res.depth_cap);

  res.container.ground_size = system.ground_size();
  res.container.covers = covers.take();
  res.container.epsilon = rho;
  res.container.witness = std::move(witness);
  ensure(verify_container(system, res.container), "small-set container");
  return res;
}

MnetFamily bootstrap_interval_mnet(const SetSystem& system, const Fraction& epsilon, const Fraction& delta,
                                   PropertyMProvider& provider) {
  if (!epsilon.is_positive() || epsilon > Fraction(1, 2)) throw ParameterError("epsilon must lie in (0, 1/2]");
  if (delta <= epsilon || delta > Fraction(1)) throw ParameterError("delta must lie in (epsilon, 1]");
  return bootstrap_unchecked(system, epsilon, delta, provider);
}

HeavyMnetParams heavy_mnet_params(const Fraction& lambda, const Fraction& eta, const Fraction& Lambda) {
  require_open_unit(lambda, "lambda");
  require_open_unit(eta, "eta");
  HeavyMnetParams p;
  p.lambda = lambda;
  p.eta = eta;
  p.eps0 = formulas::heavy_eps0(lambda);
  p.t0 = formulas::heavy_t0(lambda, Lambda);
  p.t0_ceil = static_cast<std::size_t>(std::ceil(p.t0));
  const Fraction growth = Fraction(1) + p.eps0;
  for (Fraction d = eta; d <= Fraction(1); d = d * growth) {
    p.delta_seq.push_back(d);
    p.l_seq.push_back(d * growth);
  }
  return p;
}

HeavyMnetResult heavy_mnet(const SetSystem& system, const Fraction& lambda, const Fraction& eta,
                           PropertyMProvider& provider) {
  HeavyMnetResult res{heavy_mnet_params(lambda, eta, provider.Lambda()), {}};
  SetPool pieces;
  for (const Fraction& delta : res.params.delta_seq)
    for (const auto& piece : bootstrap_unchecked(system, res.params.eps0, delta, provider).pieces) pieces.add(piece);
  res.mnet = MnetFamily{system.ground_size(), pieces.take(), lambda, eta};
  ensure(verify_mnet(system, res.mnet), "heavy Mnet");
  return res;
}

ContainerFamily build_container(const SetSystem& system, const Fraction& epsilon,
                                PropertyMProvider& provider_complement) {
  if (!epsilon.is_positive() || epsilon > Fraction(1)) throw ParameterError("epsilon must lie in (0, 1]");
  const std::int64_t n = n_of(system);
  const ElementSet whole = ElementSet::full(system.ground_size());
  SetPool covers;
  std::vector<std::optional<std::size_t>> witness(system.size());

  const std::int64_t big_min = (Fraction(1) - epsilon).ceil_mul(n);
  const std::int64_t small_max = epsilon.floor_mul(n);
  std::vector<ElementSet> small, middle;
  for (std::size_t i = 0; i < system.size(); ++i) {
    const auto c = static_cast<std::int64_t>(system[i].count());
    if (c >= big_min)
      witness[i] = covers.add(whole);
    else if (c <= small_max)
      small.push_back(system[i]);
    else
      middle.push_back(system[i]);
  }

  if (!small.empty()) {
    const SetSystem sub(system.ground_size(), std::move(small));
    const SmallSetResult part = small_set_container(sub, epsilon, epsilon, provider_complement);
    for (std::size_t j = 0; j < sub.size(); ++j)
      witness[*system.find(sub[j])] = covers.add(part.container.covers[*part.container.witness[j]]);
  }

  if (!middle.empty()) {
    const SetSystem sub(system.ground_size(), std::move(middle));
    const SetSystem comp = complement_family(sub);
    const Fraction heaviness = Fraction(1) - epsilon;
    const HeavyMnetResult part = heavy_mnet(comp, heaviness, epsilon, provider_complement);
    for (const auto& r : sub) {
      const auto j = heavy_piece_in(part.mnet.pieces, r.complement(), heaviness);
      if (!j) throw InvariantError("heavy Mnet left a middle range without a piece");
      witness[*system.find(r)] = covers.add(part.mnet.pieces[*j].complement());
    }
  }

  ContainerFamily out{system.ground_size(), covers.take(), epsilon, std::move(witness)};
  ensure(verify_container(system, out), "container");
  return out;
}

BracketFamily build_bracket(const SetSystem& system, const Fraction& epsilon, PropertyMProvider& provider,
                            PropertyMProvider& provider_complement) {
  if (!epsilon.is_positive() || epsilon > Fraction(1)) throw ParameterError("epsilon must lie in (0, 1]");
  const std::size_t n = system.ground_size();
  BracketFamily out;
  out.ground_size = n;
  out.epsilon = epsilon;
  out.pairing.resize(system.size());
  SetPool sets;
  const std::size_t empty_index = sets.add(ElementSet(n));

  if (epsilon == Fraction(1)) {
    const std::size_t full_index = sets.add(ElementSet::full(n));
    for (auto& p : out.pairing) p = std::make_pair(empty_index, full_index);
  } else {
    const Fraction half = epsilon / Fraction(2);
    const ContainerFamily upper = build_container(system, half, provider_complement);
    const auto low_max = half.floor_mul(static_cast<std::int64_t>(n));
    const Fraction heaviness = Fraction(1) - half;
    std::vector<ElementSet> lower_pieces;
    if (std::any_of(system.begin(), system.end(),
                    [&](const ElementSet& r) { return static_cast<std::int64_t>(r.count()) > low_max; }))
      lower_pieces = heavy_mnet(system, heaviness, half, provider).mnet.pieces;

    for (std::size_t i = 0; i < system.size(); ++i) {
      const ElementSet& f = system[i];
      std::size_t lo = empty_index;
      if (static_cast<std::int64_t>(f.count()) > low_max) {
        const auto j = heavy_piece_in(lower_pieces, f, heaviness);
        if (!j) throw InvariantError("heavy Mnet left a range without a lower set");
        lo = sets.add(lower_pieces[*j]);
      }
      const std::size_t hi = sets.add(upper.covers[*upper.witness[i]]);
      out.pairing[i] = std::make_pair(lo, hi);
    }
  }
  out.sets = sets.take();
  ensure(verify_bracket(system, out), "bracket");
  return out;
}

}  // namespace bracketkit
