#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bracketkit/constructions.hpp"
#include "bracketkit/errors.hpp"
#include "bracketkit/experiment.hpp"
#include "bracketkit/hull.hpp"
#include "bracketkit/json_io.hpp"
#include "bracketkit/protocols.hpp"
#include "bracketkit/verify.hpp"

using namespace bracketkit;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-")
    std::cout << text << '\n';
  else
    write_text_file(path, text);
}

std::string describe(const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t i) {
    out += (first ? "" : ",") + std::to_string(i);
    first = false;
  });
  return out + "}";
}

int report(const VerifyReport& r, const std::string& what) {
  if (r.passed) {
    std::cout << what << ": passed (" << r.checked << " ranges checked)\n";
    return kOk;
  }
  std::cout << what << ": FAILED at range " << r.counterexample->range_index << " "
            << describe(r.counterexample->range) << ": " << r.counterexample->reason << '\n';
  return kVerifyFailed;
}

std::optional<Fraction> optional_fraction(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return Fraction::parse(text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Containers, brackets, Mnets and packings for finite geometric set systems"};
  app.require_subcommand(1);
  int status = kOk;

  // gen
  std::string kind = "grid", ranges_family, out_path, jitter_text, system_out;
  std::size_t dim = 2, count = 0;
  std::uint64_t seed = 0;
  auto* gen = app.add_subcommand("gen", "Generate a point set (and optionally its range system)");
  gen->add_option("--kind", kind, "grid | moment-curve | sphere | random")->required();
  gen->add_option("--d", dim, "Dimension")->required();
  gen->add_option("--n", count, "Number of points")->required();
  gen->add_option("--seed", seed, "Seed for random points and jitter");
  gen->add_option("--jitter", jitter_text, "Jitter scale p/q for breaking degeneracies");
  gen->add_option("--out", out_path, "Point set JSON (default stdout)");
  gen->add_option("--ranges", ranges_family, "Also enumerate ranges: halfspace | ball | box");
  gen->add_option("--system-out", system_out, "Where to write the range system");
  gen->callback([&] {
    const PointSet pts = make_points(kind, dim, count, seed, optional_fraction(jitter_text));
    emit(out_path, to_json(pts));
    if (!ranges_family.empty()) emit(system_out, to_json(make_ranges(pts, ranges_family)));
  });

  // enum-ranges
  std::string points_path, family_name = "halfspace";
  std::size_t polytope_k = 2, veronese_degree = 0;
  auto* enumerate = app.add_subcommand("enum-ranges", "Enumerate the range system of a point set");
  enumerate->add_option("--points", points_path, "Point set JSON")->required();
  enumerate->add_option("--family", family_name, "halfspace | ball | box | polytope");
  enumerate->add_option("--k", polytope_k, "Halfspaces per polytope");
  enumerate->add_option("--veronese", veronese_degree, "Lift points to this degree first");
  enumerate->add_option("--out", out_path, "System JSON (default stdout)");
  enumerate->callback([&] {
    PointSet pts = point_set_from_json(read_text_file(points_path));
    if (veronese_degree > 0) pts = veronese_lift(pts, veronese_degree);
    const SetSystem s =
        family_name == "polytope" ? enumerate_polytope_ranges(pts, polytope_k) : make_ranges(pts, family_name);
    emit(out_path, to_json(s));
    std::cerr << s.size() << " ranges on " << s.ground_size() << " points\n";
  });

  // packing
  std::string system_path;
  std::size_t delta = 0, d0 = 0;
  std::optional<std::size_t> cap;
  auto* packing = app.add_subcommand("packing", "Greedy maximal delta-packing");
  packing->add_option("--system", system_path, "System JSON")->required();
  packing->add_option("--delta", delta, "Symmetric-difference threshold (members differ in more)")->required();
  packing->add_option("--cap", cap, "Shallowness cap on member size");
  packing->add_option("--d0", d0, "Report packing bounds for this VC dimension");
  packing->add_option("--out", out_path, "Packing JSON (default stdout)");
  packing->callback([&] {
    const SetSystem s = set_system_from_json(read_text_file(system_path));
    const Packing p = greedy_delta_packing(s, delta, cap);
    emit(out_path, to_json(p));
    if (d0 > 0) {
      const auto r = packing_bound_report(s, p, d0);
      std::cerr << "members " << r.member_count << ", (n/delta)^d0 " << r.haussler_term << ", c_hat " << r.c_hat;
      if (r.shallow_expression) std::cerr << ", shallow bound " << *r.shallow_expression;
      std::cerr << '\n';
    }
  });

  // mnet
  std::string eps_text, lambda_text = "1/2", eta_text, method = "base";
  auto* mnet = app.add_subcommand("mnet", "Build and verify a heavy epsilon-Mnet");
  mnet->add_option("--system", system_path, "System JSON")->required();
  mnet->add_option("--eps", eps_text, "Size threshold epsilon (p/q)")->required();
  mnet->add_option("--lambda", lambda_text, "Heaviness (base and heavy methods)");
  mnet->add_option("--eta", eta_text, "Boosting slack (boost method)");
  mnet->add_option("--method", method, "base | boost | heavy")->check(CLI::IsMember({"base", "boost", "heavy"}));
  mnet->add_option("--out", out_path, "Family JSON (default stdout)");
  mnet->callback([&] {
    const SetSystem s = set_system_from_json(read_text_file(system_path));
    const Fraction eps = Fraction::parse(eps_text);
    PropertyMProvider provider;
    MnetFamily m;
    if (method == "base") {
      m = base_mnet(s, Fraction::parse(lambda_text), eps);
    } else if (method == "boost") {
      if (eta_text.empty()) throw InputError("--method boost needs --eta");
      const BoostResult b = boost_epsilon(s, provider, eps, Fraction::parse(eta_text));
      for (const auto& line : b.log) std::cerr << line << '\n';
      m = b.mnet;
    } else {
      m = heavy_mnet(s, Fraction::parse(lambda_text), eps, provider).mnet;
    }
    emit(out_path, to_json(m));
    status = report(verify_mnet(s, m), "mnet (" + std::to_string(m.size()) + " pieces)");
  });

  // container
  auto* container = app.add_subcommand("container", "Build and verify an epsilon-container");
  container->add_option("--system", system_path, "System JSON")->required();
  container->add_option("--eps", eps_text, "Slack epsilon (p/q)")->required();
  container->add_option("--out", out_path, "Family JSON (default stdout)");
  container->callback([&] {
    const SetSystem s = set_system_from_json(read_text_file(system_path));
    const Fraction eps = Fraction::parse(eps_text);
    PropertyMProvider provider_complement;
    const ContainerFamily c = build_container(s, eps, provider_complement);
    emit(out_path, to_json(c));
    std::cerr << "lower bound " << container_lower_bound(s, eps) << '\n';
    status = report(verify_container(s, c), "container (" + std::to_string(c.size()) + " covers)");
  });

  // bracket
  auto* bracket = app.add_subcommand("bracket", "Build and verify an epsilon-bracket");
  bracket->add_option("--system", system_path, "System JSON")->required();
  bracket->add_option("--eps", eps_text, "Slack epsilon (p/q)")->required();
  bracket->add_option("--out", out_path, "Family JSON (default stdout)");
  bracket->callback([&] {
    const SetSystem s = set_system_from_json(read_text_file(system_path));
    PropertyMProvider provider, provider_complement;
    const BracketFamily b = build_bracket(s, Fraction::parse(eps_text), provider, provider_complement);
    emit(out_path, to_json(b));
    status = report(verify_bracket(s, b), "bracket (" + std::to_string(b.size()) + " sets)");
  });

  // verify
  std::string family_path;
  auto* verify = app.add_subcommand("verify", "Check a family against a system");
  verify->add_option("--system", system_path, "System JSON")->required();
  verify->add_option("--family", family_path, "Family JSON")->required();
  verify->callback([&] {
    const SetSystem s = set_system_from_json(read_text_file(system_path));
    const AnyFamily f = family_from_json(read_text_file(family_path));
    if (const auto* m = std::get_if<MnetFamily>(&f)) status = report(verify_mnet(s, *m), "mnet");
    if (const auto* c = std::get_if<ContainerFamily>(&f)) status = report(verify_container(s, *c), "container");
    if (const auto* b = std::get_if<BracketFamily>(&f)) status = report(verify_bracket(s, *b), "bracket");
  });

  // protocols
  std::string instance_path, transcript_path, eps0_text = "1/8";
  std::size_t domain_n = 64;
  bool with_families = false;
  auto protocol_options = [&](CLI::App* cmd) {
    cmd->add_option("--instance", instance_path, "Instance JSON (otherwise one is generated)");
    cmd->add_option("--n", domain_n, "Domain size for a generated instance");
    cmd->add_option("--d", dim, "Dimension for a generated instance");
    cmd->add_option("--seed", seed, "Seed for a generated instance");
    cmd->add_option("--eps0", eps0_text, "Container/bracket parameter of the shared families");
    cmd->add_flag("--families", with_families, "Also build the shared eps0-container and bracket");
    cmd->add_option("--transcript", transcript_path, "Write the transcript as JSONL");
  };
  auto* learn = app.add_subcommand("protocol-learn", "Simulate two-party halfspace learning");
  protocol_options(learn);
  learn->callback([&] {
    LearningInstance inst;
    std::optional<ProtocolContext> ctx;
    if (!instance_path.empty()) {
      inst = learning_instance_from_json(read_text_file(instance_path));
      ctx.emplace(inst.domain, Fraction::parse(eps0_text), with_families);
    } else {
      ctx.emplace(general_position_points(dim, domain_n, seed), Fraction::parse(eps0_text), with_families);
      inst = random_learning_instance(*ctx, seed);
    }
    const LearningOutcome out = learn_halfspace_protocol(*ctx, inst);
    if (!transcript_path.empty()) write_text_file(transcript_path, out.transcript.to_jsonl());
    std::cout << "instance_id,rounds,total_bits,correct\n"
              << (instance_path.empty() ? "generated-s" + std::to_string(seed) : instance_path) << ','
              << out.rounds << ',' << out.transcript.total_bits << ',' << (out.consistent ? "true" : "false")
              << '\n';
    if (out.aborted) std::cerr << "aborted: no halfspace is consistent with " << out.certificate.size() << " examples\n";
    status = out.consistent ? kOk : kVerifyFailed;
  });

  auto* disjoint = app.add_subcommand("protocol-disjoint", "Simulate two-party convex set disjointness");
  protocol_options(disjoint);
  disjoint->callback([&] {
    DisjointnessInstance inst;
    std::optional<ProtocolContext> ctx;
    if (!instance_path.empty()) {
      inst = disjointness_instance_from_json(read_text_file(instance_path));
      ctx.emplace(inst.domain, Fraction::parse(eps0_text), with_families);
    } else {
      ctx.emplace(general_position_points(dim, domain_n, seed), Fraction::parse(eps0_text), with_families);
      inst = random_disjointness_instance(*ctx, seed);
    }
    const DisjointnessOutcome out = convex_disjointness_protocol(*ctx, inst);
    const HullIntersection truth = exact_hull_intersection(inst.domain, inst.alice, inst.bob);
    const bool correct = truth.intersecting == (out.answer == DisjointnessAnswer::intersecting);
    if (!transcript_path.empty()) write_text_file(transcript_path, out.transcript.to_jsonl());
    std::cout << "instance_id,answer,rounds,total_bits,correct\n"
              << (instance_path.empty() ? "generated-s" + std::to_string(seed) : instance_path) << ','
              << (out.answer == DisjointnessAnswer::disjoint ? "disjoint" : "intersecting") << ',' << out.rounds
              << ',' << out.transcript.total_bits << ',' << (correct ? "true" : "false") << '\n';
    status = correct ? kOk : kVerifyFailed;
  });

  // bench
  std::string spec_path;
  auto* bench = app.add_subcommand("bench", "Run an experiment grid and emit CSV");
  bench->add_option("--spec", spec_path, "Experiment spec JSON")->required();
  bench->add_option("--out", out_path, "CSV path (default: spec output, else stdout)");
  bench->callback([&] {
    const ExperimentSpec spec = ExperimentSpec::from_json(read_text_file(spec_path));
    const std::string csv = to_csv(run_experiment(spec));
    const std::string target = out_path.empty() ? spec.output : out_path;
    if (target.empty())
      std::cout << csv;
    else
      write_text_file(target, csv);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  } catch (const InvariantError& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kVerifyFailed;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DegeneracyError& e) {
    std::cerr << "degenerate input: " << e.what() << " (try --jitter)\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return status;
}
