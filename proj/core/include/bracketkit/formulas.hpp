#pragma once

#include <cstddef>

#include "bracketkit/fraction.hpp"

namespace bracketkit::formulas {

/// min(1/4, eta/2): the band growth rate used when boosting epsilon.
Fraction boost_eta_prime(const Fraction& eta);

/// Smallest t with (1 + eta')^t * epsilon >= 1, i.e. ceil(log(1/eps) / log(1 + eta')).
std::size_t boost_band_count(const Fraction& epsilon, const Fraction& eta_prime);

/// 3 eps / (2 + 2 eps): relative size bound of P \ A inside a bootstrap group.
Fraction bootstrap_eps_prime(const Fraction& epsilon);

/// (1 - lambda) / 4
Fraction heavy_eps0(const Fraction& lambda);

/// 1 + log(4 / (1 - lambda)) / log(1 / (1 - Lambda/2)), unrounded.
double heavy_t0(const Fraction& lambda, const Fraction& Lambda);

/// Smallest K with (1 + eps0)^K * eta >= 1.
std::size_t heavy_band_count(const Fraction& eta, const Fraction& eps0);

/// 1 + log(1/eps) / log(1 / (1 - Lambda/2)), unrounded.
double small_set_depth_bound(const Fraction& epsilon, const Fraction& Lambda);

/// ceil(small_set_depth_bound): the enforced recursion depth cap.
std::size_t small_set_depth_cap(const Fraction& epsilon, const Fraction& Lambda);

/// Smallest t with base^t * start >= 1; base > 1, start > 0.
std::size_t geometric_steps_to_one(const Fraction& start, const Fraction& base);

}  // namespace bracketkit::formulas
