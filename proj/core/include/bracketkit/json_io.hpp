#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "bracketkit/families.hpp"
#include "bracketkit/geometry.hpp"
#include "bracketkit/packing.hpp"
#include "bracketkit/protocols.hpp"
#include "bracketkit/set_system.hpp"

// Text formats. Parse errors and shape violations throw InputError.
//   SetSystem  {"n": int, "ranges": [[i, ...], ...]}
//   PointSet   {"dim": int, "points": [["p/q", ...], ...]}
//   Packing    {"n": int, "delta": int, "cap": int|null, "members": [[i, ...], ...]}
//   families   {"kind": "mnet"|"container"|"bracket", "params": {"n", "epsilon", "lambda"?},
//               "sets": [[i, ...], ...], "pairing": [...]?}
// For containers "pairing" lists a cover index (or null) per range; for
// brackets a [lower, upper] pair (or null) per range.

namespace bracketkit {

std::string to_json(const SetSystem& system);
SetSystem set_system_from_json(std::string_view text);

std::string to_json(const PointSet& pts);
PointSet point_set_from_json(std::string_view text);

std::string to_json(const Packing& packing);
Packing packing_from_json(std::string_view text);

std::string to_json(const MnetFamily& family);
std::string to_json(const ContainerFamily& family);
std::string to_json(const BracketFamily& family);
using AnyFamily = std::variant<MnetFamily, ContainerFamily, BracketFamily>;
AnyFamily family_from_json(std::string_view text);

/// {"domain": PointSet, "alice": [[index, label], ...], "bob": [...]}
std::string to_json(const LearningInstance& inst);
LearningInstance learning_instance_from_json(std::string_view text);

/// {"domain": PointSet, "alice": [index, ...], "bob": [...]}
std::string to_json(const DisjointnessInstance& inst);
DisjointnessInstance disjointness_instance_from_json(std::string_view text);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace bracketkit
