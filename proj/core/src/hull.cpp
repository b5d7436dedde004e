#include "bracketkit/hull.hpp"

#include "bracketkit/errors.hpp"

namespace bracketkit {

HullIntersection exact_hull_intersection(const PointSet& domain, const std::vector<std::size_t>& a,
                                         const std::vector<std::size_t>& b) {
  domain.validate();
  for (std::size_t i : a)
    if (i >= domain.size()) throw InputError("hull index out of range");
  for (std::size_t i : b)
    if (i >= domain.size()) throw InputError("hull index out of range");
  HullIntersection out;
  if (a.empty() || b.empty()) return out;

  const std::size_t d = domain.dim;
  const std::size_t rows = d + 2;
  const std::size_t vars = a.size() + b.size();
  const std::size_t cols = vars + rows;  // original variables, then artificials
  // Tableau rows hold [A | I | rhs]; every rhs is 0 or 1, so the artificials
  // form a feasible starting basis.
  std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + 1, 0));
  for (std::size_t c = 0; c < d; ++c) {
    for (std::size_t i = 0; i < a.size(); ++i) t[c][i] = domain.points[a[i]][c];
    for (std::size_t j = 0; j < b.size(); ++j) t[c][a.size() + j] = -domain.points[b[j]][c];
  }
  for (std::size_t i = 0; i < a.size(); ++i) t[d][i] = 1;
  for (std::size_t j = 0; j < b.size(); ++j) t[d + 1][a.size() + j] = 1;
  t[d][cols] = 1;
  t[d + 1][cols] = 1;
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    t[r][vars + r] = 1;
    basis[r] = vars + r;
  }
  // Reduced costs of the phase-one objective (sum of artificials).
  std::vector<Rational> z(cols + 1, 0);
  for (std::size_t j = 0; j <= cols; ++j) {
    if (j >= vars && j < cols) continue;
    for (std::size_t r = 0; r < rows; ++r) z[j] -= t[r][j];
  }

  for (;;) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (z[j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t[r][enter] <= 0) continue;
      Rational ratio = t[r][cols] / t[r][enter];
      if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = ratio;
      }
    }
    if (leave == rows) throw InvariantError("phase-one simplex is unbounded");
    const Rational pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      const Rational f = t[r][enter];
      for (std::size_t j = 0; j <= cols; ++j) t[r][j] -= f * t[leave][j];
    }
    if (z[enter] != 0) {
      const Rational f = z[enter];
      for (std::size_t j = 0; j <= cols; ++j) z[j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }

  // z[cols] holds minus the objective value.
  if (z[cols] == 0) {
    out.intersecting = true;
    out.witness.assign(d, 0);
    for (std::size_t r = 0; r < rows; ++r) {
      if (basis[r] >= a.size()) continue;
      for (std::size_t c = 0; c < d; ++c) out.witness[c] += t[r][cols] * domain.points[a[basis[r]]][c];
    }
    return out;
  }

  // Duals y = 1 - (reduced cost of each artificial): y.A_j <= 0 on every
  // column and y.rhs > 0, so w = -y[0..d) separates.
  out.normal.resize(d);
  for (std::size_t c = 0; c < d; ++c) out.normal[c] = z[vars + c] - 1;
  auto dot = [&](std::size_t idx) {
    Rational v = 0;
    for (std::size_t c = 0; c < d; ++c) v += out.normal[c] * domain.points[idx][c];
    return v;
  };
  out.lower = dot(a[0]);
  for (std::size_t i : a) out.lower = std::min(out.lower, dot(i));
  out.upper = dot(b[0]);
  for (std::size_t j : b) out.upper = std::max(out.upper, dot(j));
  if (!(out.upper < out.lower)) throw InvariantError("Farkas certificate does not separate the hulls");
  return out;
}

}  // namespace bracketkit
