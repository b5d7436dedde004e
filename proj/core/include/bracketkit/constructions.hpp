#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bracketkit/families.hpp"
#include "bracketkit/property_m.hpp"
#include "bracketkit/set_system.hpp"

namespace bracketkit {

// Every construction verifies its output before returning it and throws
// InvariantError if verification fails. Parameters outside their domain
// raise ParameterError.

struct BoostBand {
  std::size_t index = 0;
  Fraction eps_i;          ///< (1 + eta')^i epsilon
  Fraction delta_i;        ///< eta' eps_i
  std::int64_t threshold;  ///< floor(delta_i n), the packing distance
  std::int64_t size_limit; ///< members have fewer than eps_i n elements
  std::size_t packing_size = 0;
  std::size_t piece_count = 0;
};

struct BoostResult {
  MnetFamily mnet;  ///< heaviness Lambda (1 - eta)
  Fraction eta;
  Fraction eta_prime;
  std::size_t t = 0;  ///< ceil(log(1/eps) / log(1 + eta'))
  std::vector<BoostBand> bands;
  std::vector<std::string> log;
};

/// Turns the provider's 1/2-Mnets into a Lambda(1-eta)-heavy epsilon-Mnet.
/// Ranges with eps_{i-1} n <= |R| < eps_i n are handled by a maximal packing
/// at distance delta_i n of the ranges below eps_i n; each member P gets the
/// provider's 1/2-Mnet of the trace on P. Requires epsilon, eta in (0, 1).
BoostResult boost_epsilon(const SetSystem& system, PropertyMProvider& provider, const Fraction& epsilon,
                          const Fraction& eta);

/// Result of a duality transform. `system` is the family the output is
/// valid for: the ranges of size <= delta0 n (containers) or their
/// complements (Mnets).
struct ContainerOnSubfamily {
  SetSystem system;
  ContainerFamily container;
};

struct MnetOnSubfamily {
  SetSystem system;
  MnetFamily mnet;
};

/// Complements of a lambda-heavy (1-delta0)-Mnet of the complements of the
/// ranges of size <= delta0 n form a (1 - lambda + lambda delta0)-container
/// for those ranges. Throws InputError with a counterexample if `mnet` is
/// not such an Mnet.
ContainerOnSubfamily mnet_to_container(const SetSystem& system, const MnetFamily& mnet, const Fraction& delta0,
                                       const Fraction& lambda);

/// Complements of a (1-lambda)-container of the ranges of size <= delta0 n
/// form a (lambda - delta0)-heavy (1 - delta0)-Mnet of their complements,
/// each used piece having at least (lambda - delta0) n elements. Throws
/// ParameterError if lambda <= delta0 and InputError if `container` is not
/// such a container.
MnetOnSubfamily container_to_mnet(const SetSystem& system, const ContainerFamily& container, const Fraction& delta0,
                                  const Fraction& lambda);

struct SmallSetResult {
  ContainerFamily container;  ///< a rho-container
  std::size_t max_depth = 0;  ///< removal steps on the longest branch
  std::size_t depth_cap = 0;
  std::size_t nodes = 0;
};

/// rho-container for a family whose ranges all have at most epsilon n
/// elements. Each node (Z, S) holds ranges R ⊆ Z with |Z \ R| > rho n; the
/// provider's Mnet of {Z \ R} yields pieces C, and R moves to the child
/// Z \ C for the first piece with C ⊆ Z \ R and |C| >= Lambda |Z \ R|.
/// A range stops at the first node where |Z \ R| <= rho n and Z becomes its
/// cover. Requires 0 < rho <= epsilon < 1. Throws InvariantError if a branch
/// outgrows ceil(1 + log(1/eps) / log(1/(1 - Lambda/2))).
SmallSetResult small_set_container(const SetSystem& system, const Fraction& epsilon, const Fraction& rho,
                                   PropertyMProvider& provider);

/// (1-4eps)-heavy delta-Mnet for the ranges with delta n <= |R| <= (1+eps) delta n.
/// Members P of a maximal eps delta n-packing of that band each collect the
/// ranges A within distance eps delta n; complements within P of an
/// eps-container of {P \ A} are the pieces. Requires eps in (0, 1/2] and
/// delta in (eps, 1].
MnetFamily bootstrap_interval_mnet(const SetSystem& system, const Fraction& epsilon, const Fraction& delta,
                                   PropertyMProvider& provider);

struct HeavyMnetParams {
  Fraction lambda;
  Fraction eta;
  Fraction eps0;                  ///< (1 - lambda) / 4
  double t0 = 0.0;                ///< 1 + log(4/(1-lambda)) / log(1/(1-Lambda/2))
  std::size_t t0_ceil = 0;
  std::vector<Fraction> delta_seq;  ///< delta_k = (1 + eps0)^k eta while delta_k <= 1
  std::vector<Fraction> l_seq;      ///< l_k = delta_{k+1}, upper end of band k
};

HeavyMnetParams heavy_mnet_params(const Fraction& lambda, const Fraction& eta, const Fraction& Lambda);

struct HeavyMnetResult {
  HeavyMnetParams params;
  MnetFamily mnet;
};

/// lambda-heavy eta-Mnet for any lambda in (0, 1): the union of
/// bootstrap_interval_mnet(eps0, delta_k) over the bands [delta_k n, l_k n).
HeavyMnetResult heavy_mnet(const SetSystem& system, const Fraction& lambda, const Fraction& eta,
                           PropertyMProvider& provider);

/// epsilon-container: X for ranges with |R| >= (1-eps) n, small_set_container
/// for ranges with |R| <= eps n, and complements of a (1-eps)-heavy eps-Mnet
/// of the complement family for the rest. epsilon = 1 gives {X}.
ContainerFamily build_container(const SetSystem& system, const Fraction& epsilon,
                                PropertyMProvider& provider_complement);

/// epsilon-bracket: upper sets from build_container(eps/2); lower set of F is
/// empty if |F| <= (eps/2) n and otherwise a piece inside F of a
/// (1-eps/2)-heavy (eps/2)-Mnet of the system. epsilon = 1 gives {∅, X}.
BracketFamily build_bracket(const SetSystem& system, const Fraction& epsilon, PropertyMProvider& provider,
                            PropertyMProvider& provider_complement);

}  // namespace bracketkit
