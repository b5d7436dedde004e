#include "bracketkit/set_system.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_set>

#include "bracketkit/errors.hpp"

namespace bracketkit {

SetSystem::SetSystem(std::size_t ground_size, std::vector<ElementSet> ranges)
    : n_(ground_size), ranges_(std::move(ranges)) {
  for (const auto& r : ranges_)
    if (r.universe() != n_)
      throw InputError("range over universe " + std::to_string(r.universe()) +
                       " in a system with ground set size " + std::to_string(n_));
  std::sort(ranges_.begin(), ranges_.end(), canonical_less);
  ranges_.erase(std::unique(ranges_.begin(), ranges_.end()), ranges_.end());
}

SetSystem SetSystem::from_index_lists(std::size_t ground_size,
                                      const std::vector<std::vector<std::size_t>>& ranges) {
  std::vector<ElementSet> sets;
  sets.reserve(ranges.size());
  for (const auto& r : ranges) sets.push_back(ElementSet::from_indices(ground_size, r));
  return SetSystem(ground_size, std::move(sets));
}

std::optional<std::size_t> SetSystem::find(const ElementSet& range) const {
  if (range.universe() != n_) return std::nullopt;
  auto it = std::lower_bound(ranges_.begin(), ranges_.end(), range, canonical_less);
  if (it != ranges_.end() && *it == range) return static_cast<std::size_t>(it - ranges_.begin());
  return std::nullopt;
}

ElementSet Projection::lift(const ElementSet& local, std::size_t original_universe) const {
  ElementSet out(original_universe);
  local.for_each([&](std::size_t i) { out.set(original_index[i]); });
  return out;
}

ElementSet Projection::localize(const ElementSet& original) const {
  ElementSet out(original_index.size());
  for (std::size_t i = 0; i < original_index.size(); ++i)
    if (original.test(original_index[i])) out.set(i);
  return out;
}

Projection project(const SetSystem& system, const ElementSet& subset) {
  if (subset.universe() != system.ground_size())
    throw InputError("projection subset is not over the system's ground set");
  Projection p;
  p.original_index = subset.indices();
  std::vector<ElementSet> traces;
  traces.reserve(system.size());
  for (const auto& r : system) traces.push_back(p.localize(r));
  p.system = SetSystem(p.original_index.size(), std::move(traces));
  return p;
}

Projection project(const SetSystem& system, std::span<const std::size_t> subset) {
  return project(system, ElementSet::from_indices(system.ground_size(), subset));
}

SetSystem complement_family(const SetSystem& system) {
  std::vector<ElementSet> out;
  out.reserve(system.size());
  for (const auto& r : system) out.push_back(r.complement());
  return SetSystem(system.ground_size(), std::move(out));
}

namespace {

// Smallest integer size admitted by the lower end.
std::int64_t lower_count(const SizeInterval& iv) {
  return iv.lo_closed ? iv.lo.ceil_mul(1) : iv.lo.floor_mul(1) + 1;
}

// Largest integer size admitted by the upper end.
std::int64_t upper_count(const SizeInterval& iv) {
  return iv.hi_closed ? iv.hi.floor_mul(1) : iv.hi.ceil_mul(1) - 1;
}

}  // namespace

bool SizeInterval::contains(std::size_t size) const {
  const auto s = static_cast<std::int64_t>(size);
  return s >= lower_count(*this) && s <= upper_count(*this);
}

SetSystem filter_by_size(const SetSystem& system, const SizeInterval& interval) {
  if (interval.hi < interval.lo) throw InputError("inverted size interval");
  const std::int64_t lo = lower_count(interval);
  const std::int64_t hi = upper_count(interval);
  std::vector<ElementSet> kept;
  for (const auto& r : system) {
    const auto c = static_cast<std::int64_t>(r.count());
    if (c >= lo && c <= hi) kept.push_back(r);
  }
  return SetSystem(system.ground_size(), std::move(kept));
}

bool is_shattered(const SetSystem& system, std::span<const std::size_t> subset) {
  const std::size_t k = subset.size();
  if (k >= 63) return false;
  const std::size_t need = std::size_t{1} << k;
  if (system.size() < need) return false;
  std::vector<bool> seen(need, false);
  std::size_t found = 0;
  for (const auto& r : system) {
    std::size_t pattern = 0;
    for (std::size_t j = 0; j < k; ++j)
      if (r.test(subset[j])) pattern |= std::size_t{1} << j;
    if (!seen[pattern]) {
      seen[pattern] = true;
      if (++found == need) return true;
    }
  }
  return false;
}

namespace {

struct VcSearch {
  const SetSystem& system;
  std::size_t cap;
  VcDimension best;
  std::vector<std::size_t> current;

  // Elements e such that current + {e} is shattered: e must split every trace
  // class of `current`, i.e. lie in the class union but not the class meet.
  ElementSet extensions() const {
    const std::size_t n = system.ground_size();
    const std::size_t k = current.size();
    const std::size_t classes = std::size_t{1} << k;
    std::vector<ElementSet> any(classes, ElementSet(n));
    std::vector<ElementSet> all(classes, ElementSet::full(n));
    std::vector<bool> hit(classes, false);
    for (const auto& r : system) {
      std::size_t pattern = 0;
      for (std::size_t j = 0; j < k; ++j)
        if (r.test(current[j])) pattern |= std::size_t{1} << j;
      any[pattern] |= r;
      all[pattern] &= r;
      hit[pattern] = true;
    }
    ElementSet ok = ElementSet::full(n);
    for (std::size_t c = 0; c < classes; ++c) {
      if (!hit[c]) return ElementSet(n);
      ok &= difference(any[c], all[c]);
    }
    return ok;
  }

  void descend() {
    if (current.size() > best.dimension || (best.shattered.empty() && current.empty())) {
      best.dimension = current.size();
      best.shattered = current;
    }
    if (current.size() >= cap) {
      best.at_least = true;
      return;
    }
    const ElementSet ext = extensions();
    const std::size_t start = current.empty() ? 0 : current.back() + 1;
    for (std::size_t e = start; e < system.ground_size(); ++e) {
      if (!ext.test(e)) continue;
      current.push_back(e);
      descend();
      current.pop_back();
      if (best.at_least) return;
    }
  }
};

}  // namespace

VcDimension vc_dimension_exact(const SetSystem& system, std::size_t cap) {
  VcSearch search{system, std::min<std::size_t>(cap, 20), {}, {}};
  if (system.empty()) return search.best;
  search.descend();
  return search.best;
}

SauerShelahReport sauer_shelah_check(const SetSystem& system, std::size_t d0) {
  SauerShelahReport rep;
  rep.range_count = system.size();
  rep.d0 = d0;
  const unsigned long n = system.ground_size();
  rep.binomial_sum = 0;
  for (unsigned long i = 0; i <= d0 && i <= n; ++i) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), n, i);
    rep.binomial_sum += c;
  }
  rep.exponential_bound =
      d0 == 0 ? 1.0 : std::pow(std::exp(1.0) * static_cast<double>(n) / static_cast<double>(d0),
                               static_cast<double>(d0));
  rep.passed = mpz_class(static_cast<unsigned long>(rep.range_count)) <= rep.binomial_sum;
  return rep;
}

std::vector<CellProfile> shallow_cell_profile(const SetSystem& system,
                                              std::span<const ElementSet> samples,
                                              std::span<const std::size_t> caps) {
  std::vector<CellProfile> out;
  for (const auto& sample : samples) {
    const Projection p = project(system, sample);
    const std::size_t m = p.original_index.size();
    std::vector<std::size_t> by_size(m + 1, 0);
    for (const auto& t : p.system) ++by_size[t.count()];
    for (std::size_t cap : caps) {
      CellProfile prof;
      prof.subset_size = m;
      prof.at_most = cap;
      for (std::size_t s = 0; s <= std::min(cap, m); ++s) prof.distinct_count += by_size[s];
      prof.psi_hat = m == 0 ? 0.0 : static_cast<double>(prof.distinct_count) / static_cast<double>(m);
      out.push_back(prof);
    }
  }
  return out;
}

}  // namespace bracketkit
