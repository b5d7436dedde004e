#include "bracketkit/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "bracketkit/constructions.hpp"
#include "bracketkit/errors.hpp"
#include "bracketkit/packing.hpp"
#include "bracketkit/property_m.hpp"
#include "bracketkit/verify.hpp"

namespace bracketkit {

PointSet make_points(std::string_view kind, std::size_t d, std::size_t n, std::uint64_t seed,
                     const std::optional<Fraction>& jitter_scale) {
  PointSet pts;
  if (kind == "grid")
    pts = lower_bound_instance(d, n, InstanceKind::grid);
  else if (kind == "moment-curve")
    pts = lower_bound_instance(d, n, InstanceKind::moment_curve);
  else if (kind == "sphere")
    pts = lower_bound_instance(d, n, InstanceKind::sphere);
  else if (kind == "random")
    pts = random_points(d, n, seed);
  else
    throw InputError("unknown instance kind \"" + std::string(kind) + "\"");
  if (jitter_scale) pts = jitter(pts, *jitter_scale, seed);
  return pts;
}

SetSystem make_ranges(const PointSet& pts, std::string_view family) {
  if (family == "halfspace") return enumerate_halfspace_ranges(pts);
  if (family == "ball") return enumerate_ball_ranges(pts);
  if (family == "box") return enumerate_box_ranges(pts);
  throw InputError("unknown range family \"" + std::string(family) + "\"");
}

ExperimentSpec ExperimentSpec::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
    ExperimentSpec s;
    const auto& inst = j.at("instance");
    s.kind = inst.value("kind", s.kind);
    s.ranges = inst.value("ranges", s.ranges);
    s.d = inst.value("d", s.d);
    s.n = inst.at("n").get<std::vector<std::size_t>>();
    s.seed = inst.value("seed", s.seed);
    if (inst.contains("jitter") && !inst["jitter"].is_null()) s.jitter = Fraction::parse(inst["jitter"].get<std::string>());
    s.construction = j.value("construction", s.construction);
    static const char* const known[] = {"mnet", "boost", "heavy-mnet", "container", "bracket", "packing"};
    if (std::find(std::begin(known), std::end(known), s.construction) == std::end(known))
      throw InputError("unknown construction \"" + s.construction + "\"");
    auto fractions = [&](const char* key) {
      std::vector<Fraction> out;
      if (j.contains(key))
        for (const auto& v : j[key]) out.push_back(Fraction::parse(v.get<std::string>()));
      return out;
    };
    s.eps = fractions("eps");
    s.lambda = fractions("lambda");
    s.eta = fractions("eta");
    s.output = j.value("output", std::string());
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("bad experiment spec: ") + e.what());
  }
}

namespace {

struct Task {
  std::size_t instance = 0;
  Fraction eps;
  std::optional<Fraction> lambda, eta;
};

bool uses_lambda(const std::string& c) { return c == "mnet" || c == "heavy-mnet"; }
bool uses_eta(const std::string& c) { return c == "boost" || c == "heavy-mnet"; }

std::size_t thread_count(std::size_t tasks) {
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("BRACKETKIT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) threads = static_cast<std::size_t>(v);
  }
  return std::max<std::size_t>(1, std::min(threads, tasks));
}

/// Builds and verifies one family; returns (size, lower bound if any).
std::pair<std::size_t, std::optional<std::size_t>> run_one(const ExperimentSpec& spec, const SetSystem& system,
                                                           const Task& t) {
  PropertyMProvider provider, provider_complement;
  const std::string& c = spec.construction;
  if (c == "mnet") return {base_mnet(system, *t.lambda, t.eps).size(), std::nullopt};
  if (c == "boost") return {boost_epsilon(system, provider, t.eps, *t.eta).mnet.size(), std::nullopt};
  if (c == "heavy-mnet") return {heavy_mnet(system, *t.lambda, *t.eta, provider).mnet.size(), std::nullopt};
  if (c == "container")
    return {build_container(system, t.eps, provider_complement).size(), container_lower_bound(system, t.eps)};
  if (c == "bracket")
    return {build_bracket(system, t.eps, provider, provider_complement).size(), container_lower_bound(system, t.eps)};
  if (c == "packing")
    return {greedy_delta_packing(system, static_cast<std::size_t>(
                                             t.eps.floor_mul(static_cast<std::int64_t>(system.ground_size()))))
                .size(),
            std::nullopt};
  throw InputError("unknown construction \"" + c + "\"");
}

}  // namespace

std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec) {
  const std::string& c = spec.construction;
  if (c != "mnet" && c != "boost" && c != "heavy-mnet" && c != "container" && c != "bracket" && c != "packing")
    throw InputError("unknown construction \"" + c + "\"");

  std::vector<std::optional<Fraction>> lambdas{std::nullopt}, etas{std::nullopt};
  if (uses_lambda(c)) lambdas.assign(spec.lambda.begin(), spec.lambda.end());
  if (uses_eta(c)) etas.assign(spec.eta.begin(), spec.eta.end());

  std::vector<Task> tasks;
  for (std::size_t i = 0; i < spec.n.size(); ++i)
    for (const auto& e : spec.eps)
      for (const auto& l : lambdas)
        for (const auto& h : etas) tasks.push_back({i, e, l, h});

  std::vector<SetSystem> systems;
  std::vector<std::string> ids;
  if (!tasks.empty())
    for (std::size_t n : spec.n) {
      systems.push_back(make_ranges(make_points(spec.kind, spec.d, n, spec.seed, spec.jitter), spec.ranges));
      ids.push_back(spec.kind + "-" + spec.ranges + "-d" + std::to_string(spec.d) + "-n" + std::to_string(n) + "-s" +
                    std::to_string(spec.seed));
    }

  std::vector<ExperimentRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t k = next++; k < tasks.size(); k = next++) {
      const Task& t = tasks[k];
      ExperimentRow& row = rows[k];
      row.instance_id = ids[t.instance];
      row.kind = c;
      row.d = spec.d;
      row.n = spec.n[t.instance];
      row.eps = t.eps.str();
      row.lambda = t.lambda ? t.lambda->str() : "";
      row.eta = t.eta ? t.eta->str() : "";
      const auto start = std::chrono::steady_clock::now();
      try {
        auto [size, lower] = run_one(spec, systems[t.instance], t);
        row.family_size = size;
        row.lower_bound = lower;
        row.verified = true;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = tasks.size();
      }
      row.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
  };
  const std::size_t threads = thread_count(tasks.size());
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string to_csv(const std::vector<ExperimentRow>& rows) {
  std::ostringstream out;
  out << kExperimentCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.instance_id << ',' << r.kind << ',' << r.d << ',' << r.n << ',' << r.eps << ',' << r.lambda << ','
        << r.eta << ',' << r.family_size << ',' << (r.verified ? "true" : "false") << ',';
    if (r.lower_bound) out << *r.lower_bound;
    out << ',' << static_cast<long long>(r.runtime_ms + 0.5) << '\n';
  }
  return out.str();
}

}  // namespace bracketkit
