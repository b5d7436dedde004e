#include "bracketkit/packing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "bracketkit/errors.hpp"

namespace bracketkit {

Packing greedy_delta_packing(const SetSystem& system, std::size_t delta, std::optional<std::size_t> shallow_cap) {
  Packing p;
  p.ground_size = system.ground_size();
  p.delta = delta;
  p.shallow_cap = shallow_cap;
  for (std::size_t i = 0; i < system.size(); ++i) {
    const ElementSet& r = system[i];
    if (!p.within_cap(r)) continue;
    const bool far = std::all_of(p.members.begin(), p.members.end(),
                                 [&](const ElementSet& m) { return sym_diff_size(m, r) > delta; });
    if (far) {
      p.members.push_back(r);
      p.source_index.push_back(i);
    }
  }
  return p;
}

NearestMember nearest_neighbor(const Packing& packing, const ElementSet& range) {
  if (!packing.within_cap(range))
    throw InputError("range of size " + std::to_string(range.count()) + " exceeds the packing cap " +
                     std::to_string(*packing.shallow_cap));
  if (packing.members.empty()) throw InputError("nearest neighbor in an empty packing");
  NearestMember best{0, sym_diff_size(packing.members[0], range)};
  for (std::size_t i = 1; i < packing.members.size() && best.distance > 0; ++i) {
    const std::size_t d = sym_diff_size(packing.members[i], range);
    if (d < best.distance) best = {i, d};
  }
  return best;
}

PackingBoundReport packing_bound_report(const SetSystem& system, const Packing& packing, std::size_t d0) {
  if (d0 == 0) throw InputError("d0 must be at least 1");
  if (packing.delta == 0) throw InputError("packing bounds need delta >= 1");
  const double n = static_cast<double>(packing.ground_size);
  const double delta = static_cast<double>(packing.delta);
  const double dd = static_cast<double>(d0);
  PackingBoundReport r;
  r.member_count = packing.size();
  r.d0 = d0;
  r.haussler_term = std::pow(n / delta, dd);
  r.c_hat = delta / n * std::pow(static_cast<double>(r.member_count), 1.0 / dd);
  if (packing.shallow_cap) {
    const std::size_t m = std::min<std::size_t>(
        packing.ground_size, static_cast<std::size_t>(std::ceil(4.0 * dd * n / delta)));
    const std::size_t cap = static_cast<std::size_t>(std::floor(12.0 * dd * static_cast<double>(*packing.shallow_cap) / delta));
    std::mt19937_64 rng(0x9ac);
    std::vector<std::size_t> idx(packing.ground_size);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<ElementSet> samples;
    for (int s = 0; s < 4; ++s) {
      std::shuffle(idx.begin(), idx.end(), rng);
      samples.push_back(ElementSet::from_indices(packing.ground_size, std::span<const std::size_t>(idx.data(), m)));
    }
    const std::size_t caps[] = {cap};
    double psi = 0.0;
    if (m > 0)
      for (const auto& prof : shallow_cell_profile(system, samples, caps)) psi = std::max(psi, prof.psi_hat);
    r.psi_hat = psi;
    r.shallow_expression = 24.0 * dd * n / delta * psi;
  }
  return r;
}

}  // namespace bracketkit
