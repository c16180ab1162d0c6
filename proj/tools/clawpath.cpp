// clawpath: solve, verify and fuzz ordered induced path problems on claw-free graphs.
//
// Exit codes: 0 yes (verify: certificate valid), 1 no (verify: invalid; fuzz:
// discrepancy), 2 exhausted, 3 input error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "clawpath/generators.hpp"
#include "clawpath/io.hpp"
#include "clawpath/oracles.hpp"
#include "clawpath/pipeline.hpp"
#include "clawpath/recognizers.hpp"

using namespace clawpath;

namespace {

constexpr int kExitYes = 0, kExitNo = 1, kExitExhausted = 2, kExitInput = 3;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Json parse_json(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(what + ": " + e.what());
  }
}

Instance load_instance(const std::string& path, std::string format) {
  if (format.empty()) format = ends_with(path, ".json") ? "json" : "edgelist";
  std::string text = slurp(path);
  if (format == "json") return instance_from_json(parse_json(text, path));
  std::istringstream in(text);
  return read_edge_list(in);
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path);
  out << j.dump(2) << '\n';
}

int exit_code(Verdict v) {
  switch (v) {
    case Verdict::Yes: return kExitYes;
    case Verdict::No: return kExitNo;
    case Verdict::Exhausted: return kExitExhausted;
  }
  return kExitInput;
}

struct SolveArgs {
  std::string input, format, variant, emit_trace;
  std::vector<VertexId> terminals;
  bool oracle_only = false, force_oracle = false;
  std::uint64_t seed = 0, budget = 0;
  std::size_t window = 6;
};

int run_solve(const SolveArgs& args) {
  Instance inst = load_instance(args.input, args.format);
  if (!args.variant.empty()) {
    static const std::map<std::string, Variant> names{{"ordered", Variant::OrderedPath},
                                                      {"path", Variant::Path},
                                                      {"cycle", Variant::Cycle},
                                                      {"disjoint", Variant::DisjointPaths}};
    inst.variant = names.at(args.variant);
  }
  if (!args.terminals.empty()) inst.terminals = args.terminals;
  inst.validate();

  PipelineConfig cfg;
  cfg.oracle_only = args.oracle_only;
  cfg.force_oracle = args.force_oracle;
  cfg.seed = args.seed;
  cfg.shuffle_branches = args.seed != 0;
  cfg.window = args.window;
  if (args.budget) cfg.budget.max_nodes = args.budget;

  Answer a = solve(inst, cfg);
  for (const auto& w : a.stats.warnings) std::cerr << "warning: " << w << '\n';
  std::cout << to_json(a).dump(2) << '\n';
  if (!args.emit_trace.empty()) write_json_file(args.emit_trace, to_json(a.trace ? *a.trace : ReductionTrace{inst, {}}));
  return exit_code(a.verdict);
}

int run_verify(const std::string& input, const std::string& format, const std::string& answer_path) {
  Instance inst = load_instance(input, format);
  Json j = parse_json(slurp(answer_path), answer_path);
  if (j.contains("variant")) {
    auto v = parse_variant(j["variant"].get<std::string>());
    if (!v) throw InputError("unknown variant in answer");
    inst.variant = *v;
  }
  if (j.contains("terminals")) inst.terminals = j["terminals"].get<std::vector<VertexId>>();
  inst.validate();
  bool ok = verify(inst, answer_from_json(j));
  std::cout << (ok ? "valid" : "invalid") << '\n';
  return ok ? kExitYes : kExitNo;
}

struct FuzzArgs {
  std::size_t n = 12, k = 4, iters = 100, window = 6;
  std::uint64_t seed = 1;
  std::string variant = "ordered";
};

bool oracle_says_yes(const Instance& inst) {
  switch (inst.variant) {
    case Variant::OrderedPath: return oracle_ordered_path(inst.graph, inst.terminals).verdict == Verdict::Yes;
    case Variant::Path: return oracle_k_in_a_path(inst.graph, inst.terminals).verdict == Verdict::Yes;
    case Variant::DisjointPaths: return oracle_disjoint_paths(inst.graph, inst.pairs()).verdict == Verdict::Yes;
    case Variant::Cycle: return oracle_induced_cycle(inst.graph, inst.terminals).verdict == Verdict::Yes;
  }
  return false;
}

int run_fuzz(const FuzzArgs& args) {
  static const std::map<std::string, Variant> names{
      {"ordered", Variant::OrderedPath}, {"path", Variant::Path}, {"cycle", Variant::Cycle}, {"disjoint", Variant::DisjointPaths}};
  Variant variant = names.at(args.variant);
  const Family families[] = {Family::LineGraph, Family::ProperInterval, Family::ProperCircular, Family::StripComposition};
  Rng rng(args.seed);
  PipelineConfig cfg;
  cfg.window = args.window;
  std::size_t yes = 0, discrepancies = 0, unverified = 0, exhausted = 0, fallbacks = 0;
  auto t0 = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < args.iters; ++i) {
    Graph g = random_family_graph(families[i % 4], args.n, rng);
    std::size_t k = std::uniform_int_distribution<std::size_t>(2, std::max<std::size_t>(2, args.k))(rng);
    std::size_t want = variant == Variant::DisjointPaths ? 2 * k : k;
    if (want > g.order()) continue;
    Instance inst{g, random_terminals(g, want, rng), variant};
    if (inst.terminals.size() != want) continue;
    Answer a = solve(inst, cfg);
    fallbacks += a.stats.fallback_count();
    if (a.verdict == Verdict::Exhausted) {
      ++exhausted;
      continue;
    }
    bool oracle = oracle_says_yes(inst);
    yes += a.verdict == Verdict::Yes;
    if ((a.verdict == Verdict::Yes) != oracle || !verify(inst, a)) {
      bool cert_bad = a.verdict == Verdict::Yes && !verify(inst, a);
      unverified += cert_bad;
      discrepancies += !cert_bad;
      std::cerr << "discrepancy on " << to_json(inst).dump() << ": pipeline " << to_string(a.verdict) << ", oracle "
                << (oracle ? "yes" : "no") << '\n';
    }
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Json summary{{"iterations", args.iters}, {"yes", yes},           {"discrepancies", discrepancies},
               {"unverified", unverified}, {"exhausted", exhausted}, {"fallbacks", fallbacks},
               {"seconds", secs}};
  std::cout << summary.dump(2) << '\n';
  return discrepancies + unverified == 0 ? kExitYes : kExitNo;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ordered induced paths, induced disjoint paths and induced cycles in claw-free graphs"};
  app.require_subcommand(1);
  const std::vector<std::string> variants{"ordered", "path", "cycle", "disjoint"};

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve one instance and print the answer as JSON");
  solve_cmd->add_option("--input", solve_args.input, "Instance file, '-' for stdin")->required();
  solve_cmd->add_option("--variant", solve_args.variant, "Problem variant (default: from the file, else ordered)")
      ->check(CLI::IsMember(variants));
  solve_cmd->add_option("--format", solve_args.format, "Input format (default: by extension)")
      ->check(CLI::IsMember({"edgelist", "json"}));
  solve_cmd->add_option("--terminals", solve_args.terminals, "Terminal list, overriding the file");
  solve_cmd->add_flag("--oracle-only", solve_args.oracle_only, "Skip the structural pipeline");
  solve_cmd->add_flag("--force-oracle", solve_args.force_oracle, "Accept graphs with claws and answer by oracle");
  solve_cmd->add_option("--emit-trace", solve_args.emit_trace, "Write the reduction trace JSON here");
  solve_cmd->add_option("--seed", solve_args.seed, "Nonzero: evaluate branches in a seeded random order");
  solve_cmd->add_option("--budget", solve_args.budget, "Search node budget per search")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--window", solve_args.window, "Prefix length guessed per segment")
      ->check(CLI::Range(std::size_t{3}, std::size_t{64}));

  std::string verify_input, verify_format, verify_answer;
  auto* verify_cmd = app.add_subcommand("verify", "Check an answer JSON against an instance");
  verify_cmd->add_option("--input", verify_input, "Instance file")->required();
  verify_cmd->add_option("--answer", verify_answer, "Answer JSON file")->required();
  verify_cmd->add_option("--format", verify_format, "Input format (default: by extension)")
      ->check(CLI::IsMember({"edgelist", "json"}));

  FuzzArgs fuzz_args;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Compare the pipeline with the oracles on random claw-free graphs");
  fuzz_cmd->add_option("--n", fuzz_args.n, "Maximum number of vertices")->check(CLI::Range(4, 40));
  fuzz_cmd->add_option("--k", fuzz_args.k, "Maximum number of terminals (pairs for disjoint)")->check(CLI::Range(2, 8));
  fuzz_cmd->add_option("--iters", fuzz_args.iters, "Number of random instances");
  fuzz_cmd->add_option("--seed", fuzz_args.seed, "Random seed");
  fuzz_cmd->add_option("--variant", fuzz_args.variant, "Problem variant")->check(CLI::IsMember(variants));
  fuzz_cmd->add_option("--window", fuzz_args.window, "Prefix length guessed per segment")
      ->check(CLI::Range(std::size_t{3}, std::size_t{64}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*solve_cmd) return run_solve(solve_args);
    if (*verify_cmd) return run_verify(verify_input, verify_format, verify_answer);
    if (*fuzz_cmd) return run_fuzz(fuzz_args);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << " (use --force-oracle for graphs with claws)\n";
    return kExitInput;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const SearchExhausted& e) {
    std::cerr << e.what() << '\n';
    return kExitExhausted;
  }
  return kExitInput;
}
