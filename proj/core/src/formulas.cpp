#include "bracketkit/formulas.hpp"

#include <cmath>

#include "bracketkit/errors.hpp"

namespace bracketkit::formulas {

Fraction boost_eta_prime(const Fraction& eta) { return min(Fraction(1, 4), eta / Fraction(2)); }

std::size_t geometric_steps_to_one(const Fraction& start, const Fraction& base) {
  if (!start.is_positive()) throw ParameterError("geometric sequence must start above 0");
  if (base <= Fraction(1)) throw ParameterError("geometric sequence base must exceed 1");
  std::size_t t = 0;
  for (Fraction v = start; v < Fraction(1); v = v * base) ++t;
  return t;
}

std::size_t boost_band_count(const Fraction& epsilon, const Fraction& eta_prime) {
  return geometric_steps_to_one(epsilon, Fraction(1) + eta_prime);
}

Fraction bootstrap_eps_prime(const Fraction& epsilon) {
  return Fraction(3) * epsilon / (Fraction(2) + Fraction(2) * epsilon);
}

Fraction heavy_eps0(const Fraction& lambda) { return (Fraction(1) - lambda) / Fraction(4); }

double heavy_t0(const Fraction& lambda, const Fraction& Lambda) {
  const double l = lambda.to_double();
  const double big = Lambda.to_double();
  return 1.0 + std::log(4.0 / (1.0 - l)) / std::log(1.0 / (1.0 - big / 2.0));
}

std::size_t heavy_band_count(const Fraction& eta, const Fraction& eps0) {
  return geometric_steps_to_one(eta, Fraction(1) + eps0);
}

double small_set_depth_bound(const Fraction& epsilon, const Fraction& Lambda) {
  return 1.0 + std::log(1.0 / epsilon.to_double()) / std::log(1.0 / (1.0 - Lambda.to_double() / 2.0));
}

std::size_t small_set_depth_cap(const Fraction& epsilon, const Fraction& Lambda) {
  return static_cast<std::size_t>(std::ceil(small_set_depth_bound(epsilon, Lambda)));
}

}  // namespace bracketkit::formulas
