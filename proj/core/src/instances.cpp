#include <cmath>
#include <numbers>
#include <random>

#include "bracketkit/errors.hpp"
#include "bracketkit/geometry.hpp"

namespace bracketkit {

namespace {

constexpr long kResolution = 1L << 20;

Rational rounded(double v) {
  Rational q(static_cast<long>(std::lround(v * kResolution)), kResolution);
  q.canonicalize();
  return q;
}

// Inverse stereographic projection of a rounded preimage of the direction u;
// the result has unit length exactly.
std::vector<Rational> rational_unit_vector(const std::vector<double>& u) {
  const std::size_t d = u.size();
  const bool upper = u[d - 1] >= 0;
  std::vector<Rational> y(d - 1);
  Rational norm2 = 0;
  for (std::size_t i = 0; i + 1 < d; ++i) {
    y[i] = rounded(u[i] / (upper ? 1 + u[d - 1] : 1 - u[d - 1]));
    norm2 += y[i] * y[i];
  }
  const Rational denom = 1 + norm2;
  std::vector<Rational> x(d);
  for (std::size_t i = 0; i + 1 < d; ++i) x[i] = 2 * y[i] / denom;
  x[d - 1] = upper ? Rational((1 - norm2) / denom) : Rational((norm2 - 1) / denom);
  for (auto& c : x) c.canonicalize();
  return x;
}

// Roughly uniform directions: equal angles on the circle, a Fibonacci
// spiral on S^2, seeded Gaussians beyond.
std::vector<std::vector<double>> directions(std::size_t d, std::size_t n) {
  std::vector<std::vector<double>> out;
  out.reserve(n);
  if (d == 2) {
    for (std::size_t k = 0; k < n; ++k) {
      const double theta = 2 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
      out.push_back({std::cos(theta), std::sin(theta)});
    }
  } else if (d == 3) {
    const double golden = std::numbers::pi * (3 - std::sqrt(5.0));
    for (std::size_t k = 0; k < n; ++k) {
      const double z = 1 - 2 * (static_cast<double>(k) + 0.5) / static_cast<double>(n);
      const double r = std::sqrt(1 - z * z);
      const double phi = golden * static_cast<double>(k);
      out.push_back({r * std::cos(phi), r * std::sin(phi), z});
    }
  } else {
    std::mt19937_64 rng(0x5eed + d);
    std::normal_distribution<double> g;
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<double> v(d);
      double len = 0;
      do {
        len = 0;
        for (auto& c : v) {
          c = g(rng);
          len += c * c;
        }
      } while (len < 1e-12);
      for (auto& c : v) c /= std::sqrt(len);
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace

PointSet lower_bound_instance(std::size_t d, std::size_t n, InstanceKind kind) {
  if (d == 0) throw InputError("dimension must be at least 1");
  PointSet out;
  out.dim = d;
  switch (kind) {
    case InstanceKind::sphere:
      if (d == 1) {
        for (std::size_t k = 0; k < n; ++k) {
          Rational x = n == 1 ? Rational(0) : Rational(-1) + Rational(2 * static_cast<long>(k), static_cast<long>(n - 1));
          x.canonicalize();
          out.points.push_back({x});
        }
      } else {
        for (const auto& u : directions(d, n)) out.points.push_back(rational_unit_vector(u));
      }
      break;
    case InstanceKind::moment_curve:
      for (std::size_t t = 1; t <= n; ++t) {
        std::vector<Rational> p(d);
        mpz_class power = 1;
        for (std::size_t c = 0; c < d; ++c) {
          power *= static_cast<unsigned long>(t);
          p[c] = Rational(power);
        }
        out.points.push_back(std::move(p));
      }
      break;
    case InstanceKind::grid: {
      std::size_t side = 1;
      auto fits = [&](std::size_t s) {
        mpz_class cap = 1;
        for (std::size_t c = 0; c < d; ++c) cap *= static_cast<unsigned long>(s);
        return cap >= static_cast<unsigned long>(n);
      };
      while (!fits(side)) ++side;
      std::vector<std::size_t> idx(d, 0);
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rational> p(d);
        for (std::size_t c = 0; c < d; ++c) p[c] = static_cast<long>(idx[c]);
        out.points.push_back(std::move(p));
        for (std::size_t c = d; c-- > 0;) {
          if (++idx[c] < side) break;
          idx[c] = 0;
        }
      }
      break;
    }
  }
  return out;
}

PointSet jitter(const PointSet& pts, const Fraction& scale, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> step(-512, 512);
  PointSet out = pts;
  const Rational unit = scale.value() / 1024;
  for (auto& p : out.points)
    for (auto& c : p) {
      c += unit * step(rng);
      c.canonicalize();
    }
  return out;
}

PointSet random_points(std::size_t d, std::size_t n, std::uint64_t seed, std::int64_t range) {
  if (d == 0) throw InputError("dimension must be at least 1");
  if (range < 0) throw InputError("coordinate range must be non-negative");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coord(-range, range);
  PointSet out;
  out.dim = d;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rational> p(d);
    for (auto& c : p) c = coord(rng);
    out.points.push_back(std::move(p));
  }
  return out;
}

}  // namespace bracketkit
