#include "bracketkit/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_set>

#include "bracketkit/errors.hpp"

namespace bracketkit {

void PointSet::validate() const {
  if (dim == 0) throw InputError("point set dimension must be at least 1");
  for (std::size_t i = 0; i < points.size(); ++i)
    if (points[i].size() != dim)
      throw InputError("point " + std::to_string(i) + " has " + std::to_string(points[i].size()) +
                       " coordinates, expected " + std::to_string(dim));
}

bool LinearQuery::contains(const std::vector<Rational>& x) const {
  Rational v = 0;
  for (std::size_t i = 0; i < normal.size(); ++i) v += normal[i] * x[i];
  switch (sense) {
    case Sense::at_least: return v >= offset;
    case Sense::greater: return v > offset;
    case Sense::equal: return v == offset;
  }
  return false;
}

ElementSet LinearQuery::select(const PointSet& pts) const {
  ElementSet out(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (contains(pts.points[i])) out.set(i);
  return out;
}

namespace {

using RangeSet = std::unordered_set<ElementSet, ElementSetHash>;
__extension__ typedef __int128 i128;

// Coordinates scaled by the common denominator; side-of-hyperplane signs are
// invariant under the scaling.
struct IntegerCoordinates {
  std::vector<std::vector<mpz_class>> coords;
  mpz_class scale;
  mpz_class max_abs;
};

IntegerCoordinates to_integer(const PointSet& pts) {
  IntegerCoordinates out;
  out.scale = 1;
  for (const auto& p : pts.points)
    for (const auto& c : p) mpz_lcm(out.scale.get_mpz_t(), out.scale.get_mpz_t(), c.get_den_mpz_t());
  out.max_abs = 0;
  out.coords.reserve(pts.size());
  for (const auto& p : pts.points) {
    std::vector<mpz_class> row;
    row.reserve(p.size());
    for (const auto& c : p) {
      mpz_class v = c.get_num() * (out.scale / c.get_den());
      if (abs(v) > out.max_abs) out.max_abs = abs(v);
      row.push_back(std::move(v));
    }
    out.coords.push_back(std::move(row));
  }
  return out;
}

template <class Int>
struct Frame {
  std::size_t n = 0;
  std::size_t d = 0;
  std::vector<Int> c;
  const Int* point(std::size_t i) const { return c.data() + i * d; }
};

template <class Int>
Int from_mpz(const mpz_class& v);

template <>
mpz_class from_mpz<mpz_class>(const mpz_class& v) {
  return v;
}

template <>
i128 from_mpz<i128>(const mpz_class& v) {
  return static_cast<i128>(v.get_si());
}

template <class Int>
int sign_of(const Int& v) {
  if constexpr (std::is_same_v<Int, mpz_class>) {
    return sgn(v);
  } else {
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
  }
}

template <class Int>
Frame<Int> make_frame(const IntegerCoordinates& ic, std::size_t d) {
  Frame<Int> f;
  f.n = ic.coords.size();
  f.d = d;
  f.c.reserve(f.n * d);
  for (const auto& row : ic.coords)
    for (const auto& v : row) f.c.push_back(from_mpz<Int>(v));
  return f;
}

// Fraction-free Gaussian elimination; `m` is k x k row-major.
template <class Int>
Int bareiss_det(std::vector<Int> m, std::size_t k) {
  if (k == 0) return Int(1);
  Int prev = 1;
  int sign = 1;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (sign_of(m[i * k + i]) == 0) {
      std::size_t swap = i + 1;
      while (swap < k && sign_of(m[swap * k + i]) == 0) ++swap;
      if (swap == k) return Int(0);
      for (std::size_t c = 0; c < k; ++c) std::swap(m[i * k + c], m[swap * k + c]);
      sign = -sign;
    }
    for (std::size_t r = i + 1; r < k; ++r)
      for (std::size_t c = i + 1; c < k; ++c) {
        Int num = m[r * k + c] * m[i * k + i] - m[r * k + i] * m[i * k + c];
        m[r * k + c] = num / prev;
      }
    prev = m[i * k + i];
  }
  Int det = m[k * k - 1];
  return sign > 0 ? det : Int(-det);
}

// Normal of the hyperplane through the points T (|T| = d), by cofactor
// expansion of the rows p_t - p_0. Returns false if the points are affinely
// dependent (the normal vanishes).
template <class Int>
bool hyperplane_through(const Frame<Int>& f, const std::vector<std::size_t>& t, std::vector<Int>& normal,
                        Int& offset) {
  const std::size_t d = f.d;
  normal.assign(d, Int(0));
  if (d == 1) {
    normal[0] = 1;
    offset = f.point(t[0])[0];
    return true;
  }
  const Int* p0 = f.point(t[0]);
  std::vector<Int> rows((d - 1) * d);
  for (std::size_t r = 1; r < d; ++r) {
    const Int* p = f.point(t[r]);
    for (std::size_t c = 0; c < d; ++c) rows[(r - 1) * d + c] = p[c] - p0[c];
  }
  bool nonzero = false;
  std::vector<Int> minor((d - 1) * (d - 1));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t r = 0; r + 1 < d; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < d; ++c) {
        if (c == j) continue;
        minor[r * (d - 1) + cc++] = rows[r * d + c];
      }
    }
    Int det = bareiss_det(minor, d - 1);
    normal[j] = (j % 2 == 0) ? det : Int(-det);
    if (sign_of(normal[j]) != 0) nonzero = true;
  }
  offset = 0;
  for (std::size_t c = 0; c < d; ++c) offset += normal[c] * p0[c];
  return nonzero;
}

// Advances `comb` to the next k-combination of {0..n-1}; false when done.
bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  for (std::size_t i = k; i-- > 0;) {
    if (comb[i] < n - k + i) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::string describe_tuple(const std::vector<std::size_t>& t) {
  std::string s = "{";
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + "}";
}

enum class SideRule { both_sides, ball_interior };

// For every hyperplane through d of the points: both open sides, each unioned
// with every subset of the d boundary points. General position makes every
// boundary pattern realizable by a small perturbation.
template <class Int>
void sweep_hyperplanes(const Frame<Int>& f, SideRule rule, RangeSet& out) {
  const std::size_t n = f.n;
  const std::size_t d = f.d;
  if (n < d) return;
  std::vector<std::size_t> t(d);
  std::iota(t.begin(), t.end(), 0);
  std::vector<Int> normal;
  Int offset;
  const std::size_t patterns = std::size_t{1} << d;
  do {
    if (!hyperplane_through(f, t, normal, offset))
      throw DegeneracyError("affinely dependent points " + describe_tuple(t));
    ElementSet above(n), below(n);
    std::size_t ti = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (ti < d && t[ti] == j) {
        ++ti;
        continue;
      }
      const Int* p = f.point(j);
      Int v = 0;
      for (std::size_t c = 0; c < d; ++c) v += normal[c] * p[c];
      v -= offset;
      const int s = sign_of(v);
      if (s == 0)
        throw DegeneracyError("point " + std::to_string(j) + " lies on the hyperplane through " +
                              describe_tuple(t));
      (s > 0 ? above : below).set(j);
    }
    const int last = sign_of(normal[d - 1]);
    for (std::size_t mask = 0; mask < patterns; ++mask) {
      ElementSet a = above, b = below;
      for (std::size_t i = 0; i < d; ++i)
        if (mask & (std::size_t{1} << i)) {
          a.set(t[i]);
          b.set(t[i]);
        }
      if (rule == SideRule::both_sides) {
        out.insert(std::move(a));
        out.insert(std::move(b));
      } else if (last < 0) {
        out.insert(std::move(a));
      } else if (last > 0) {
        out.insert(std::move(b));
      } else {
        throw DegeneracyError("points " + describe_tuple(t) + " and the lift axis are coplanar");
      }
    }
  } while (next_combination(t, n));
}

// Rank of the differences p_i - p_0 over the rationals.
std::size_t affine_rank(const PointSet& pts) {
  if (pts.size() <= 1) return 0;
  std::vector<std::vector<Rational>> m;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<Rational> row(pts.dim);
    for (std::size_t c = 0; c < pts.dim; ++c) row[c] = pts.points[i][c] - pts.points[0][c];
    m.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < pts.dim && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      Rational factor = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < pts.dim; ++c) m[r][c] -= factor * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

void insert_power_set(std::size_t n, RangeSet& out) {
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    ElementSet s(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) s.set(i);
    out.insert(std::move(s));
  }
}

RangeSet hyperplane_ranges(const PointSet& pts, SideRule rule) {
  pts.validate();
  const std::size_t n = pts.size();
  RangeSet out;
  out.insert(ElementSet(n));
  out.insert(ElementSet::full(n));
  if (n <= pts.dim) {
    if (affine_rank(pts) + 1 != n && n > 0) throw DegeneracyError("affinely dependent point set");
    insert_power_set(n, out);
    return out;
  }
  const IntegerCoordinates ic = to_integer(pts);
  // 2^24 keeps every d <= 3 cofactor and dot product inside 128 bits.
  if (pts.dim <= 3 && ic.max_abs < mpz_class(1) << 24) {
    sweep_hyperplanes(make_frame<i128>(ic, pts.dim), rule, out);
  } else {
    sweep_hyperplanes(make_frame<mpz_class>(ic, pts.dim), rule, out);
  }
  return out;
}

SetSystem to_system(std::size_t n, RangeSet&& ranges) {
  std::vector<ElementSet> v;
  v.reserve(ranges.size());
  for (auto it = ranges.begin(); it != ranges.end();) {
    auto node = ranges.extract(it++);
    v.push_back(std::move(node.value()));
  }
  return SetSystem(n, std::move(v));
}

// Particular solution of A x = b (A is r x c, r <= c, full row rank assumed).
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(b[piv], b[r]);
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || a[k][c] == 0) continue;
      Rational factor = a[k][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[k][j] -= factor * a[r][j];
      b[k] -= factor * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t k = r; k < rows; ++k)
    if (b[k] != 0) return std::nullopt;
  std::vector<Rational> x(cols, 0);
  for (std::size_t k = 0; k < r; ++k) x[pivot_col[k]] = b[k] / a[k][pivot_col[k]];
  return x;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational v = 0;
  for (std::size_t i = 0; i < a.size(); ++i) v += a[i] * b[i];
  return v;
}

// Tilts the hyperplane <normal, x> = offset so that boundary point t[i] lands
// strictly inside when bit i of mask is set and strictly outside otherwise,
// without moving any other point across.
LinearQuery perturb(const PointSet& pts, const std::vector<std::size_t>& t, std::size_t mask,
                    std::vector<Rational> normal, Rational offset) {
  const std::size_t d = pts.dim;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> rhs;
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<Rational> row(pts.points[t[i]]);
    row.push_back(-1);
    a.push_back(std::move(row));
    rhs.push_back((mask & (std::size_t{1} << i)) ? 1 : -1);
  }
  auto sol = solve_linear(std::move(a), std::move(rhs));
  if (!sol) throw DegeneracyError("boundary points are affinely dependent");
  std::vector<Rational> dn(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(d));
  const Rational db = (*sol)[d];
  Rational mu = 1;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (std::find(t.begin(), t.end(), j) != t.end()) continue;
    const Rational v = dot(normal, pts.points[j]) - offset;
    const Rational w = dot(dn, pts.points[j]) - db;
    if (w == 0) continue;
    Rational bound = abs(v) / (2 * abs(w));
    if (bound < mu) mu = bound;
  }
  for (int attempt = 0; attempt < 64; ++attempt) {
    LinearQuery q;
    q.normal.resize(d);
    bool nonzero = false;
    for (std::size_t c = 0; c < d; ++c) {
      q.normal[c] = normal[c] + mu * dn[c];
      if (q.normal[c] != 0) nonzero = true;
    }
    q.offset = offset + mu * db;
    q.sense = Sense::at_least;
    if (nonzero) return q;
    mu /= 2;
  }
  throw InvariantError("could not perturb hyperplane to a nonzero normal");
}

}  // namespace

SetSystem enumerate_halfspace_ranges(const PointSet& pts) {
  return to_system(pts.size(), hyperplane_ranges(pts, SideRule::both_sides));
}

SetSystem enumerate_ball_ranges(const PointSet& pts) {
  pts.validate();
  return to_system(pts.size(), hyperplane_ranges(paraboloid_lift(pts), SideRule::ball_interior));
}

std::vector<WitnessedRange> enumerate_halfspace_queries(const PointSet& pts) {
  pts.validate();
  const std::size_t n = pts.size();
  const std::size_t d = pts.dim;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<WitnessedRange> out;
  auto emit = [&](LinearQuery q) {
    ElementSet r = q.select(pts);
    if (seen.insert(r).second) out.push_back({std::move(r), std::move(q)});
  };

  Rational lo = 0, hi = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i == 0 || pts.points[i][0] < lo) lo = pts.points[i][0];
    if (i == 0 || pts.points[i][0] > hi) hi = pts.points[i][0];
  }
  std::vector<Rational> e1(d, 0);
  e1[0] = 1;
  emit(LinearQuery{e1, hi + 1, Sense::at_least});
  emit(LinearQuery{e1, lo - 1, Sense::at_least});

  if (n <= d) {
    if (n > 0 && affine_rank(pts) + 1 != n) throw DegeneracyError("affinely dependent point set");
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    // Any hyperplane containing every point; pad with a direction outside their span.
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<std::vector<Rational>> a;
      std::vector<Rational> rhs;
      for (std::size_t i = 0; i < n; ++i) {
        std::vector<Rational> row(pts.points[i]);
        row.push_back(-1);
        a.push_back(std::move(row));
        rhs.push_back((mask & (std::size_t{1} << i)) ? 1 : -1);
      }
      auto sol = solve_linear(std::move(a), std::move(rhs));
      if (!sol) throw DegeneracyError("affinely dependent point set");
      std::vector<Rational> normal(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(d));
      if (std::all_of(normal.begin(), normal.end(), [](const Rational& v) { return v == 0; }))
        continue;  // constant functional; pattern is all-in or all-out, already emitted
      emit(LinearQuery{normal, (*sol)[d], Sense::at_least});
    }
    return out;
  }

  const IntegerCoordinates ic = to_integer(pts);
  const Frame<mpz_class> f = make_frame<mpz_class>(ic, d);
  std::vector<std::size_t> t(d);
  std::iota(t.begin(), t.end(), 0);
  std::vector<mpz_class> inormal;
  mpz_class ioffset;
  do {
    if (!hyperplane_through(f, t, inormal, ioffset))
      throw DegeneracyError("affinely dependent points " + describe_tuple(t));
    std::vector<Rational> normal(d);
    for (std::size_t c = 0; c < d; ++c) normal[c] = Rational(inormal[c]);
    Rational offset = Rational(ioffset) / Rational(ic.scale);
    offset.canonicalize();
    for (std::size_t j = 0; j < n; ++j) {
      if (std::find(t.begin(), t.end(), j) != t.end()) continue;
      if (dot(normal, pts.points[j]) == offset)
        throw DegeneracyError("point " + std::to_string(j) + " lies on the hyperplane through " +
                              describe_tuple(t));
    }
    std::vector<Rational> flipped(d);
    for (std::size_t c = 0; c < d; ++c) flipped[c] = -normal[c];
    for (std::size_t mask = 0; mask < (std::size_t{1} << d); ++mask) {
      emit(perturb(pts, t, mask, normal, offset));
      emit(perturb(pts, t, mask, flipped, -offset));
    }
  } while (next_combination(t, n));
  std::sort(out.begin(), out.end(),
            [](const WitnessedRange& a, const WitnessedRange& b) { return canonical_less(a.range, b.range); });
  return out;
}

SetSystem enumerate_box_ranges(const PointSet& pts) {
  pts.validate();
  const std::size_t n = pts.size();
  const std::size_t d = pts.dim;
  // Per axis: the trace of every closed interval between two coordinate values.
  std::vector<std::vector<ElementSet>> slabs(d);
  for (std::size_t axis = 0; axis < d; ++axis) {
    std::vector<Rational> values;
    for (const auto& p : pts.points) values.push_back(p[axis]);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (std::size_t a = 0; a < values.size(); ++a)
      for (std::size_t b = a; b < values.size(); ++b) {
        ElementSet s(n);
        for (std::size_t i = 0; i < n; ++i)
          if (pts.points[i][axis] >= values[a] && pts.points[i][axis] <= values[b]) s.set(i);
        slabs[axis].push_back(std::move(s));
      }
  }
  RangeSet out;
  out.insert(ElementSet(n));
  auto recurse = [&](auto&& self, std::size_t axis, const ElementSet& acc) -> void {
    if (acc.empty()) return;
    if (axis == d) {
      out.insert(acc);
      return;
    }
    for (const auto& s : slabs[axis]) self(self, axis + 1, acc & s);
  };
  recurse(recurse, 0, ElementSet::full(n));
  return to_system(n, std::move(out));
}

SetSystem enumerate_polytope_ranges(const PointSet& pts, std::size_t k, std::size_t budget) {
  if (k == 0) throw InputError("polytope ranges need k >= 1");
  const SetSystem halfspaces = enumerate_halfspace_ranges(pts);
  const std::size_t n = pts.size();
  RangeSet family(halfspaces.begin(), halfspaces.end());
  std::vector<ElementSet> frontier(halfspaces.begin(), halfspaces.end());
  for (std::size_t level = 2; level <= k && !frontier.empty(); ++level) {
    std::vector<ElementSet> next;
    for (const auto& a : frontier)
      for (const auto& h : halfspaces) {
        ElementSet r = a & h;
        if (family.insert(r).second) {
          next.push_back(std::move(r));
          if (family.size() > budget)
            throw ResourceError("polytope enumeration exceeded budget of " + std::to_string(budget) + " ranges");
        }
      }
    frontier = std::move(next);
  }
  return to_system(n, std::move(family));
}

std::vector<std::vector<std::size_t>> veronese_monomials(std::size_t dim, std::size_t degree) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current(dim, 0);
  auto fill = [&](auto&& self, std::size_t var, std::size_t remaining) -> void {
    if (var + 1 == dim) {
      current[var] = remaining;
      out.push_back(current);
      return;
    }
    for (std::size_t p = remaining + 1; p-- > 0;) {
      current[var] = p;
      self(self, var + 1, remaining - p);
    }
  };
  for (std::size_t total = 1; total <= degree; ++total) fill(fill, 0, total);
  return out;
}

PointSet veronese_lift(const PointSet& pts, std::size_t degree) {
  pts.validate();
  if (degree == 0) throw InputError("Veronese degree must be at least 1");
  const auto monomials = veronese_monomials(pts.dim, degree);
  PointSet out;
  out.dim = monomials.size();
  for (const auto& p : pts.points) {
    std::vector<Rational> lifted;
    lifted.reserve(monomials.size());
    for (const auto& m : monomials) {
      Rational v = 1;
      for (std::size_t c = 0; c < pts.dim; ++c)
        for (std::size_t e = 0; e < m[c]; ++e) v *= p[c];
      lifted.push_back(v);
    }
    out.points.push_back(std::move(lifted));
  }
  return out;
}

PointSet paraboloid_lift(const PointSet& pts) {
  PointSet out;
  out.dim = pts.dim + 1;
  for (const auto& p : pts.points) {
    std::vector<Rational> lifted(p);
    Rational sq = 0;
    for (const auto& c : p) sq += c * c;
    lifted.push_back(sq);
    out.points.push_back(std::move(lifted));
  }
  return out;
}

}  // namespace bracketkit
