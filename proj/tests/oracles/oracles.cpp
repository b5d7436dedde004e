#include "oracles/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>

namespace oracle {

Set to_set(const bracketkit::ElementSet& s) {
  Set out;
  for (std::size_t i = 0; i < s.universe(); ++i)
    if (s.test(i)) out.push_back(i);
  return out;
}

Family to_family(const bracketkit::SetSystem& s) {
  Family f;
  for (const auto& r : s) f.push_back(to_set(r));
  return f;
}

Family to_family(const std::vector<bracketkit::ElementSet>& sets) {
  Family f;
  for (const auto& r : sets) f.push_back(to_set(r));
  return f;
}

Family canonical(Family f) {
  std::sort(f.begin(), f.end(), [](const Set& a, const Set& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  f.erase(std::unique(f.begin(), f.end()), f.end());
  return f;
}

bool subset(const Set& a, const Set& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

std::size_t minus_size(const Set& a, const Set& b) {
  std::size_t c = 0;
  for (std::size_t x : a)
    if (!std::binary_search(b.begin(), b.end(), x)) ++c;
  return c;
}

std::size_t sym_diff(const Set& a, const Set& b) { return minus_size(a, b) + minus_size(b, a); }

Set complement(const Set& a, std::size_t n) {
  Set out;
  for (std::size_t i = 0; i < n; ++i)
    if (!std::binary_search(a.begin(), a.end(), i)) out.push_back(i);
  return out;
}

bool at_least(std::size_t a, const mpq_class& f, std::size_t b) {
  return mpz_class(static_cast<unsigned long>(a)) * f.get_den() >= f.get_num() * static_cast<unsigned long>(b);
}

bool at_most(std::size_t a, const mpq_class& f, std::size_t b) {
  return mpz_class(static_cast<unsigned long>(a)) * f.get_den() <= f.get_num() * static_cast<unsigned long>(b);
}

bool is_mnet(const Family& ranges, std::size_t n, const Family& pieces, const mpq_class& lambda, const mpq_class& eps) {
  for (const auto& r : ranges) {
    if (!at_least(r.size(), eps, n)) continue;
    bool ok = false;
    for (const auto& m : pieces)
      if (subset(m, r) && at_least(m.size(), lambda, r.size())) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

bool is_container(const Family& ranges, std::size_t n, const Family& covers, const mpq_class& eps) {
  for (const auto& r : ranges) {
    bool ok = false;
    for (const auto& c : covers)
      if (subset(r, c) && at_most(c.size() - r.size(), eps, n)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

bool is_bracket(const Family& ranges, std::size_t n, const Family& sets, const mpq_class& eps) {
  for (const auto& r : ranges) {
    bool ok = false;
    for (const auto& lo : sets) {
      if (!subset(lo, r)) continue;
      for (const auto& hi : sets)
        if (subset(r, hi) && at_most(hi.size() - lo.size(), eps, n)) {
          ok = true;
          break;
        }
      if (ok) break;
    }
    if (!ok) return false;
  }
  return true;
}

namespace {

using P = std::vector<mpq_class>;

int orient(const P& a, const P& b, const P& c) {
  return sgn((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]));
}

bool on_segment(const P& a, const P& b, const P& p) {
  return orient(a, b, p) == 0 && std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
         std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}

bool segments_meet(const P& a, const P& b, const P& c, const P& d) {
  const int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  return on_segment(a, b, c) || on_segment(a, b, d) || on_segment(c, d, a) || on_segment(c, d, b);
}

bool in_triangle(const P& a, const P& b, const P& c, const P& p) {
  const int o1 = orient(a, b, p), o2 = orient(b, c, p), o3 = orient(c, a, p);
  const bool has_neg = o1 < 0 || o2 < 0 || o3 < 0;
  const bool has_pos = o1 > 0 || o2 > 0 || o3 > 0;
  return !(has_neg && has_pos);
}

bool in_hull(const std::vector<P>& hull, const P& p) {
  const std::size_t k = hull.size();
  for (std::size_t i = 0; i < k; ++i) {
    if (hull[i] == p) return true;
    for (std::size_t j = i + 1; j < k; ++j) {
      if (on_segment(hull[i], hull[j], p)) return true;
      for (std::size_t l = j + 1; l < k; ++l)
        if (orient(hull[i], hull[j], hull[l]) != 0 && in_triangle(hull[i], hull[j], hull[l], p)) return true;
    }
  }
  return false;
}

}  // namespace

bool separable(const bracketkit::PointSet& pts, const Set& a, const Set& b) {
  if (a.empty() || b.empty()) return true;
  if (pts.dim == 1) {
    mpq_class amin = pts.points[a[0]][0], amax = amin, bmin = pts.points[b[0]][0], bmax = bmin;
    for (auto i : a) amin = std::min(amin, pts.points[i][0]), amax = std::max(amax, pts.points[i][0]);
    for (auto i : b) bmin = std::min(bmin, pts.points[i][0]), bmax = std::max(bmax, pts.points[i][0]);
    return amax < bmin || bmax < amin;
  }
  if (pts.dim != 2) throw std::invalid_argument("oracle separability handles d <= 2");
  std::vector<P> pa, pb;
  for (auto i : a) pa.push_back(pts.points[i]);
  for (auto i : b) pb.push_back(pts.points[i]);
  for (const auto& p : pa)
    if (in_hull(pb, p)) return false;
  for (const auto& p : pb)
    if (in_hull(pa, p)) return false;
  for (std::size_t i = 0; i < pa.size(); ++i)
    for (std::size_t j = i + 1; j < pa.size(); ++j)
      for (std::size_t k = 0; k < pb.size(); ++k)
        for (std::size_t l = k + 1; l < pb.size(); ++l)
          if (segments_meet(pa[i], pa[j], pb[k], pb[l])) return false;
  return true;
}

namespace {

template <class Pred>
Family all_subsets_where(std::size_t n, Pred pred) {
  Family out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Set s, t;
    for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1 ? s : t).push_back(i);
    if (pred(s, t)) out.push_back(s);
  }
  return canonical(out);
}

}  // namespace

Family halfspace_traces(const bracketkit::PointSet& pts) {
  return all_subsets_where(pts.size(), [&](const Set& s, const Set& t) { return separable(pts, s, t); });
}

Family box_traces(const bracketkit::PointSet& pts) {
  return all_subsets_where(pts.size(), [&](const Set& s, const Set& t) {
    if (s.empty()) return true;
    for (std::size_t x : t) {
      bool inside = true;
      for (std::size_t c = 0; c < pts.dim && inside; ++c) {
        mpq_class lo = pts.points[s[0]][c], hi = lo;
        for (std::size_t i : s) lo = std::min(lo, pts.points[i][c]), hi = std::max(hi, pts.points[i][c]);
        inside = lo <= pts.points[x][c] && pts.points[x][c] <= hi;
      }
      if (inside) return false;
    }
    return true;
  });
}

Family interval_traces(const bracketkit::PointSet& pts) {
  std::vector<std::size_t> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pts.points[a][0] < pts.points[b][0]; });
  Family out{{}};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i; j < order.size(); ++j) {
      Set s(order.begin() + static_cast<std::ptrdiff_t>(i), order.begin() + static_cast<std::ptrdiff_t>(j) + 1);
      std::sort(s.begin(), s.end());
      out.push_back(s);
    }
  return canonical(out);
}

std::size_t vc_dimension(const Family& ranges, std::size_t n) {
  std::size_t best = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Set y;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) y.push_back(i);
    if (y.size() <= best) continue;
    std::set<Set> traces;
    for (const auto& r : ranges) {
      Set t;
      for (std::size_t x : y)
        if (std::binary_search(r.begin(), r.end(), x)) t.push_back(x);
      traces.insert(t);
    }
    if (traces.size() == (std::size_t{1} << y.size())) best = y.size();
  }
  return best;
}

Family greedy_packing(const Family& canonical_ranges, std::size_t delta, std::optional<std::size_t> cap) {
  Family out;
  for (const auto& r : canonical_ranges) {
    if (cap && r.size() > *cap) continue;
    bool far = true;
    for (const auto& m : out)
      if (sym_diff(m, r) <= delta) far = false;
    if (far) out.push_back(r);
  }
  return out;
}

std::size_t min_container_size(const Family& ranges, std::size_t n, const mpq_class& eps) {
  if (n > 5) throw std::invalid_argument("exhaustive container search needs n <= 5");
  if (ranges.size() > 20) throw std::invalid_argument("too many ranges for exhaustive container search");
  // Each of the 2^n candidate covers serves a bitmask of ranges; find the
  // fewest candidates whose masks cover everything by BFS over mask unions.
  const std::size_t m = ranges.size();
  std::vector<std::uint32_t> serves;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Set c;
    for (std::size_t i = 0; i < n; ++i)
      if ((mask >> i) & 1) c.push_back(i);
    std::uint32_t bits = 0;
    for (std::size_t r = 0; r < m; ++r)
      if (subset(ranges[r], c) && at_most(minus_size(c, ranges[r]), eps, n)) bits |= std::uint32_t{1} << r;
    serves.push_back(bits);
  }
  const std::uint32_t goal = m == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << m) - 1;
  std::vector<int> dist(std::size_t{1} << m, -1);
  std::vector<std::uint32_t> queue{0};
  dist[0] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t cur = queue[head];
    if (cur == goal) return static_cast<std::size_t>(dist[cur]);
    for (std::uint32_t b : serves) {
      const std::uint32_t next = cur | b;
      if (dist[next] < 0) {
        dist[next] = dist[cur] + 1;
        queue.push_back(next);
      }
    }
  }
  return serves.size();
}

double binomial_sum(std::size_t n, std::size_t d) {
  double total = 0, term = 1;
  for (std::size_t i = 0; i <= d && i <= n; ++i) {
    total += term;
    term = term * static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  return total;
}

}  // namespace oracle
