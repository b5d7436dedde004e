#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bracketkit/fraction.hpp"
#include "bracketkit/geometry.hpp"
#include "bracketkit/set_system.hpp"

namespace bracketkit {

/// Point generators shared by the CLI and the experiment runner:
/// "grid", "moment-curve", "sphere", "random".
PointSet make_points(std::string_view kind, std::size_t d, std::size_t n, std::uint64_t seed,
                     const std::optional<Fraction>& jitter_scale = std::nullopt);

/// Range families: "halfspace", "ball", "box".
SetSystem make_ranges(const PointSet& pts, std::string_view family);

struct ExperimentSpec {
  std::string kind = "sphere";
  std::string ranges = "halfspace";
  std::size_t d = 2;
  std::vector<std::size_t> n;
  std::uint64_t seed = 0;
  std::optional<Fraction> jitter;
  /// "mnet", "boost", "heavy-mnet", "container", "bracket" or "packing"
  /// (packing reads eps as the distance fraction delta / n).
  std::string construction = "container";
  std::vector<Fraction> eps;
  std::vector<Fraction> lambda;  ///< used by mnet and heavy-mnet
  std::vector<Fraction> eta;     ///< used by boost and heavy-mnet
  std::string output;

  /// {"instance": {"kind", "ranges", "d", "n": [...], "seed", "jitter"?},
  ///  "construction", "eps": ["p/q", ...], "lambda": [...], "eta": [...], "output"?}
  static ExperimentSpec from_json(std::string_view text);
};

struct ExperimentRow {
  std::string instance_id;
  std::string kind;
  std::size_t d = 0;
  std::size_t n = 0;
  std::string eps, lambda, eta;
  std::size_t family_size = 0;
  bool verified = false;
  std::optional<std::size_t> lower_bound;
  double runtime_ms = 0.0;
};

inline constexpr std::string_view kExperimentCsvHeader =
    "instance_id,kind,d,n,eps,lambda,eta,family_size,verified,lower_bound,runtime_ms";

/// Runs every grid point on a pool of BRACKETKIT_THREADS workers (default:
/// hardware concurrency); rows come back in grid order. A construction that
/// fails verification propagates its InvariantError.
std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec);

std::string to_csv(const std::vector<ExperimentRow>& rows);

}  // namespace bracketkit
