#include "bracketkit/json_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bracketkit/errors.hpp"

namespace bracketkit {

using nlohmann::ordered_json;

namespace {

ordered_json parse(std::string_view text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

template <class T>
T get(const ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad field \"") + key + "\": " + e.what());
  }
}

ordered_json sets_json(const std::vector<ElementSet>& sets) {
  ordered_json a = ordered_json::array();
  for (const auto& s : sets) a.push_back(s.indices());
  return a;
}

std::vector<ElementSet> sets_from(const ordered_json& j, const char* key, std::size_t n) {
  std::vector<ElementSet> out;
  for (const auto& list : get<std::vector<std::vector<std::size_t>>>(j, key))
    out.push_back(ElementSet::from_indices(n, list));
  return out;
}

ordered_json points_json(const PointSet& pts) {
  ordered_json j;
  j["dim"] = pts.dim;
  ordered_json a = ordered_json::array();
  for (const auto& p : pts.points) {
    ordered_json row = ordered_json::array();
    for (const auto& c : p) row.push_back(format_rational(c));
    a.push_back(std::move(row));
  }
  j["points"] = std::move(a);
  return j;
}

// Rationals are written as "p/q" strings; plain JSON integers and decimals are read too.
std::string rational_text(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  if (v.is_number_float()) {
    const std::string text = v.dump();
    if (text.find_first_of("eE") == std::string::npos) return text;
  }
  throw InputError("expected a rational, got " + v.dump());
}

PointSet points_from(const ordered_json& j) {
  PointSet pts;
  pts.dim = get<std::size_t>(j, "dim");
  const auto rows = get<ordered_json>(j, "points");
  if (!rows.is_array()) throw InputError("\"points\" must be an array");
  for (const auto& row : rows) {
    if (!row.is_array()) throw InputError("each point must be an array");
    std::vector<Rational> p;
    for (const auto& c : row) p.push_back(parse_rational(rational_text(c)));
    pts.points.push_back(std::move(p));
  }
  pts.validate();
  return pts;
}

Fraction fraction_field(const ordered_json& j, const char* key) {
  return Fraction::parse(rational_text(get<ordered_json>(j, key)));
}

}  // namespace

std::string to_json(const SetSystem& system) {
  ordered_json j;
  j["n"] = system.ground_size();
  j["ranges"] = sets_json({system.begin(), system.end()});
  return j.dump();
}

SetSystem set_system_from_json(std::string_view text) {
  const auto j = parse(text);
  const auto n = get<std::size_t>(j, "n");
  return SetSystem(n, sets_from(j, "ranges", n));
}

std::string to_json(const PointSet& pts) { return points_json(pts).dump(); }

PointSet point_set_from_json(std::string_view text) { return points_from(parse(text)); }

std::string to_json(const Packing& packing) {
  ordered_json j;
  j["n"] = packing.ground_size;
  j["delta"] = packing.delta;
  j["cap"] = packing.shallow_cap ? ordered_json(*packing.shallow_cap) : ordered_json(nullptr);
  j["members"] = sets_json(packing.members);
  return j.dump();
}

Packing packing_from_json(std::string_view text) {
  const auto j = parse(text);
  Packing p;
  p.ground_size = get<std::size_t>(j, "n");
  p.delta = get<std::size_t>(j, "delta");
  if (j.contains("cap") && !j["cap"].is_null()) p.shallow_cap = get<std::size_t>(j, "cap");
  p.members = sets_from(j, "members", p.ground_size);
  return p;
}

std::string to_json(const MnetFamily& family) {
  ordered_json j;
  j["kind"] = "mnet";
  j["params"] = {{"n", family.ground_size}, {"epsilon", family.epsilon.str()}, {"lambda", family.lambda.str()}};
  j["sets"] = sets_json(family.pieces);
  return j.dump();
}

std::string to_json(const ContainerFamily& family) {
  ordered_json j;
  j["kind"] = "container";
  j["params"] = {{"n", family.ground_size}, {"epsilon", family.epsilon.str()}};
  j["sets"] = sets_json(family.covers);
  if (!family.witness.empty()) {
    ordered_json w = ordered_json::array();
    for (const auto& x : family.witness) w.push_back(x ? ordered_json(*x) : ordered_json(nullptr));
    j["pairing"] = std::move(w);
  }
  return j.dump();
}

std::string to_json(const BracketFamily& family) {
  ordered_json j;
  j["kind"] = "bracket";
  j["params"] = {{"n", family.ground_size}, {"epsilon", family.epsilon.str()}};
  j["sets"] = sets_json(family.sets);
  if (!family.pairing.empty()) {
    ordered_json w = ordered_json::array();
    for (const auto& x : family.pairing)
      w.push_back(x ? ordered_json::array({x->first, x->second}) : ordered_json(nullptr));
    j["pairing"] = std::move(w);
  }
  return j.dump();
}

AnyFamily family_from_json(std::string_view text) {
  const auto j = parse(text);
  const auto kind = get<std::string>(j, "kind");
  const auto params = get<ordered_json>(j, "params");
  const auto n = get<std::size_t>(params, "n");
  const Fraction eps = fraction_field(params, "epsilon");
  auto sets = sets_from(j, "sets", n);
  const bool has_pairing = j.contains("pairing") && !j["pairing"].is_null();
  if (kind == "mnet") return MnetFamily{n, std::move(sets), fraction_field(params, "lambda"), eps};
  if (kind == "container") {
    ContainerFamily c{n, std::move(sets), eps, {}};
    if (has_pairing)
      for (const auto& x : j["pairing"]) c.witness.push_back(x.is_null() ? std::nullopt : std::optional(x.get<std::size_t>()));
    return c;
  }
  if (kind == "bracket") {
    BracketFamily b{n, std::move(sets), eps, {}};
    if (has_pairing)
      for (const auto& x : j["pairing"]) {
        if (x.is_null()) {
          b.pairing.emplace_back();
        } else {
          if (!x.is_array() || x.size() != 2) throw InputError("bracket pairing entries are [lower, upper]");
          b.pairing.emplace_back(std::make_pair(x[0].get<std::size_t>(), x[1].get<std::size_t>()));
        }
      }
    return b;
  }
  throw InputError("unknown family kind \"" + kind + "\"");
}

std::string to_json(const LearningInstance& inst) {
  ordered_json j;
  j["domain"] = points_json(inst.domain);
  for (const char* side : {"alice", "bob"}) {
    ordered_json a = ordered_json::array();
    for (const auto& e : std::string(side) == "alice" ? inst.alice : inst.bob) a.push_back({e.index, e.label});
    j[side] = std::move(a);
  }
  return j.dump();
}

LearningInstance learning_instance_from_json(std::string_view text) {
  const auto j = parse(text);
  LearningInstance inst{points_from(get<ordered_json>(j, "domain")), {}, {}};
  for (const char* side : {"alice", "bob"})
    for (const auto& pair : get<std::vector<std::pair<std::size_t, int>>>(j, side))
      (std::string(side) == "alice" ? inst.alice : inst.bob).push_back({pair.first, pair.second});
  return inst;
}

std::string to_json(const DisjointnessInstance& inst) {
  ordered_json j;
  j["domain"] = points_json(inst.domain);
  j["alice"] = inst.alice;
  j["bob"] = inst.bob;
  return j.dump();
}

DisjointnessInstance disjointness_instance_from_json(std::string_view text) {
  const auto j = parse(text);
  return {points_from(get<ordered_json>(j, "domain")), get<std::vector<std::size_t>>(j, "alice"),
          get<std::vector<std::size_t>>(j, "bob")};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

}  // namespace bracketkit
