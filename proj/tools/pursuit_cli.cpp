// Command-line frontend: solve, retract, subdivide, generate, verify, info.
// JSON on stdout by default (--human opts into prose); exit codes:
//   0 success, 1 failed check or missed --expect-win, 2 usage or data error,
//   3 resource limit (arena cap, enumeration cap, timeout).
#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <memory>
#include <string>

#include <json.hpp>

#include "pursuit/error.hpp"
#include "pursuit/game.hpp"
#include "pursuit/generators.hpp"
#include "pursuit/graph_io.hpp"
#include "pursuit/retracts.hpp"
#include "pursuit/subdivisions.hpp"
#include "pursuit/verify.hpp"

using namespace pursuit;
using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string slurp(const std::string& path) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Parse, "cannot open file: " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Shared input flags: a positional file ("-" = stdin), JSON by default,
/// `--edges` for "u v" lines (oriented unless `--undirected`).
struct GraphInput {
  std::string file = "-";
  bool edges = false;
  bool undirected = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("file", file, "graph file, or - for standard input");
    cmd->add_flag("--edges", edges, "read an edge list (one 'u v' per line) instead of JSON");
    cmd->add_flag("--undirected", undirected, "with --edges: the list is undirected")
        ->needs(cmd->get_option("--edges"));
  }

  io::GraphVariant read() const {
    auto text = slurp(file);
    if (edges) return io::parse_edge_list(text, !undirected);
    return io::parse_graph_json(text);
  }
};

void emit(const ordered_json& j) { std::cout << j.dump() << "\n"; }

std::vector<std::string> vertex_names(const io::GraphVariant& g, const std::vector<int>& ids) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (int v : ids)
    out.push_back(std::visit([&](const auto& h) { return h.name(v); }, g));
  return out;
}

// ---- solve ----------------------------------------------------------------

struct SolveArgs {
  GraphInput input;
  std::string model = "normal";
  int k = 0;
  bool number = false, chain = false, strategy = false, expect_win = false;
  SolverOptions options;
  std::string engine = "auto";
  int max_k = 0;
};

int run_solve(const SolveArgs& a) {
  SolverOptions opts = a.options;
  if (a.engine == "serial") opts.engine = Engine::Serial;
  else if (a.engine == "parallel") opts.engine = Engine::Parallel;

  auto model = move_model_from_string(a.model);
  auto g = a.input.read();

  if (a.chain) {
    auto chain = cop_number_chain(io::expect_oriented(g, "solve --chain"), opts);
    emit({{"c_s", chain.c_s}, {"c_n", chain.c_n}, {"c_w", chain.c_w}});
    return 0;
  }

  if (a.number) {
    int n = std::visit([](const auto& h) { return h.vertex_count(); }, g);
    int bound = a.max_k > 0 ? std::min(a.max_k, n) : n;
    for (int k = 1; k <= bound; ++k) {
      bool win = model == MoveModel::Undirected
                     ? solve_undirected(io::expect_undirected(g, "solve"), k, opts).cops_win()
                     : is_k_copwin({io::expect_oriented(g, "solve"), k, model}, opts);
      if (win) {
        emit({{"cop_number", k}});
        return 0;
      }
    }
    emit({{"cop_number", nullptr}, {"exceeds", bound}});
    return 0;
  }

  Solution s = model == MoveModel::Undirected
                   ? solve_undirected(io::expect_undirected(g, "solve"), a.k, opts)
                   : solve({io::expect_oriented(g, "solve"), a.k, model}, opts);
  ordered_json out{{"model", a.model}, {"k", a.k}, {"cop_win", s.cops_win()}};
  if (s.cops_win()) {
    out["rounds"] = s.start_rank();
    out["placement"] = vertex_names(g, s.best_placement());
  } else {
    out["rounds"] = nullptr;
  }
  out["positions"] = s.position_count();
  if (a.strategy && s.cops_win() && model != MoveModel::Undirected) {
    auto strat = extract_strategy({io::expect_oriented(g, "solve"), a.k, model}, opts);
    out["strategy"] = json::parse(strat.to_json());
  }
  emit(out);
  return a.expect_win && !s.cops_win() ? 1 : 0;
}

// ---- retract --------------------------------------------------------------

struct RetractArgs {
  GraphInput input;
  std::string kind = "strong";
  bool do_reduce = false, do_apply = false;
};

int run_retract(const RetractArgs& a) {
  auto kind = retract_kind_from_string(a.kind);
  auto g = a.input.read();
  bool directed = io::is_directed(g);
  if (!directed && kind != RetractKind::UndirectedCorner)
    throw Error(ErrorKind::InvalidParameter,
                "kind '" + a.kind + "' applies to oriented graphs; use 'corner' here");

  if (a.do_reduce) {
    ordered_json out{{"kind", a.kind}};
    if (directed) {
      auto r = reduce(std::get<OrientedGraph>(g), kind);
      out["removals"] = removals_json(r.removals);
      out["graph"] = io::graph_to_json(r.graph);
    } else {
      auto r = reduce(std::get<UndirectedGraph>(g), kind);
      out["removals"] = removals_json(r.removals);
      out["graph"] = io::graph_to_json(r.graph);
    }
    emit(out);
    return 0;
  }

  auto witness = directed ? find_retract(std::get<OrientedGraph>(g), kind)
                          : find_corner(std::get<UndirectedGraph>(g));
  ordered_json out{{"kind", a.kind}};
  if (!witness) {
    out["witness"] = nullptr;
    if (a.do_apply) out["graph"] = io::graph_to_json(g);
    emit(out);
    return 0;
  }
  auto names = std::visit([](const auto& h) { return h.names(); }, g);
  out["witness"] = witness_json(name_witness(*witness, names));
  if (a.do_apply) {
    if (directed) {
      auto r = apply_retract(std::get<OrientedGraph>(g), *witness);
      out["graph"] = io::graph_to_json(r.graph);
      out["old_to_new"] = r.old_to_new;
    } else {
      auto r = apply_retract(std::get<UndirectedGraph>(g), *witness);
      out["graph"] = io::graph_to_json(r.graph);
      out["old_to_new"] = r.old_to_new;
    }
  }
  emit(out);
  return 0;
}

// ---- subdivide ------------------------------------------------------------

struct SubdivideArgs {
  GraphInput input;
  int strong_t = 0, weak_t = 0;
};

int run_subdivide(const SubdivideArgs& a) {
  if ((a.strong_t > 0) == (a.weak_t > 0))
    throw Error(ErrorKind::InvalidParameter, "give exactly one of --strong T or --weak T");
  auto g = a.input.read();
  auto result = a.strong_t > 0
                    ? strong_subdivide(io::expect_undirected(g, "subdivide --strong"), a.strong_t)
                    : weak_subdivide(io::expect_oriented(g, "subdivide --weak"), a.weak_t);
  emit(subdivision_json(result));
  return 0;
}

// ---- generate -------------------------------------------------------------

struct GenerateArgs {
  std::string spec_text, family, of_text, name;
  int n = 2;
  uint64_t seed = 0;
  double p = 0.5;
  bool manifest_entry = false;
};

int run_generate(const GenerateArgs& a) {
  GeneratorSpec spec;
  if (!a.spec_text.empty()) {
    auto j = json::parse(a.spec_text, nullptr, false);
    if (j.is_discarded()) throw Error(ErrorKind::Parse, "--spec is not valid JSON");
    spec = spec_from_json(j);
  } else {
    if (a.family.empty())
      throw Error(ErrorKind::InvalidParameter, "give --family or --spec");
    spec.family = family_from_string(a.family);
    spec.n = a.n;
    spec.seed = a.seed;
    spec.p = a.p;
    if (!a.of_text.empty()) {
      auto j = json::parse(a.of_text, nullptr, false);
      if (j.is_discarded()) throw Error(ErrorKind::Parse, "--of is not valid JSON");
      spec.of = std::make_shared<GeneratorSpec>(spec_from_json(j));
    }
  }
  auto g = generate(spec);
  if (a.manifest_entry) {
    emit({{"name", a.name},
          {"generator", spec_json(spec)},
          {"sha256", io::sha256_hex(io::to_canonical_json(g))}});
  } else {
    emit(io::graph_to_json(g));
  }
  return 0;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  bool use_default = false;
  std::string manifest;
  bool human = false, probe = false, inject_fault = false;
  SolverOptions solver;
};

int run_verify(const VerifyArgs& a) {
  if (a.use_default == !a.manifest.empty())
    throw Error(ErrorKind::InvalidParameter, "give exactly one of --default or --manifest FILE");
  Corpus corpus;
  if (!a.manifest.empty()) {
    corpus = load_corpus(a.manifest);
  } else if (const char* dir = std::getenv("ORIENTED_PURSUIT_CORPUS")) {
    corpus = load_corpus(std::string(dir) + "/corpus.json");
  } else {
    corpus = default_corpus();
  }

  VerifyOptions options;
  options.solver = a.solver;
  options.solver.disable_capture_detection = a.inject_fault;
  options.probe_undirected_subdivision = a.probe;

  auto results = run_all(corpus, options);
  if (a.human) {
    std::cout << human_summary(results);
  } else {
    std::cout << report_jsonl(results);
    std::cerr << human_summary(results);
  }
  return all_passed(results) ? 0 : 1;
}

// ---- info -----------------------------------------------------------------

struct InfoArgs {
  GraphInput input;
  bool dot = false;
};

int run_info(const InfoArgs& a) {
  auto g = a.input.read();
  if (a.dot)
    std::cout << io::to_dot(g);
  else
    std::cout << io::to_canonical_json(g) << "\n";
  return 0;
}

void add_solver_flags(CLI::App* cmd, SolverOptions& opts) {
  cmd->add_option("--arena-cap", opts.arena_cap, "largest position count the solver may build");
  cmd->add_option("--timeout-seconds", opts.timeout_seconds,
                  "abort solving after this many seconds (0 = no limit)");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact cops-and-robber toolkit for oriented graphs"};
  app.require_subcommand(1);
  std::function<int()> action;

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "solve the pursuit game on one graph");
  solve_args.input.attach(solve_cmd);
  solve_cmd->add_option("--model", solve_args.model, "strong | normal | weak | undirected")
      ->check(CLI::IsMember({"strong", "normal", "weak", "undirected"}));
  auto* k_opt = solve_cmd->add_option("-k,--k", solve_args.k, "number of cops");
  auto* number_opt =
      solve_cmd->add_flag("--number", solve_args.number, "report the least winning cop count");
  auto* chain_opt = solve_cmd->add_flag("--chain", solve_args.chain,
                                        "report c_s, c_n, c_w of an oriented graph");
  k_opt->excludes(number_opt)->excludes(chain_opt);
  number_opt->excludes(chain_opt);
  solve_cmd->add_flag("--strategy", solve_args.strategy, "include a winning cop strategy")
      ->needs(k_opt);
  solve_cmd->add_flag("--expect-win", solve_args.expect_win, "exit 1 if the cops lose")
      ->needs(k_opt);
  solve_cmd->add_option("--max-k", solve_args.max_k,
                        "with --number: stop the search at this many cops");
  solve_cmd
      ->add_option("--engine", solve_args.engine, "auto | serial | parallel")
      ->check(CLI::IsMember({"auto", "serial", "parallel"}));
  add_solver_flags(solve_cmd, solve_args.options);
  solve_cmd->callback([&] {
    if (!solve_args.number && !solve_args.chain && solve_args.k <= 0)
      throw CLI::ValidationError("solve", "give --k K, --number, or --chain");
    action = [&] { return run_solve(solve_args); };
  });

  RetractArgs retract_args;
  auto* retract_cmd = app.add_subcommand("retract", "find, apply, or exhaust vertex retracts");
  retract_args.input.attach(retract_cmd);
  retract_cmd->add_option("--kind", retract_args.kind, "strong | distributed | weak | corner")
      ->required()
      ->check(CLI::IsMember({"strong", "distributed", "weak", "corner"}));
  auto* reduce_flag = retract_cmd->add_flag("--reduce", retract_args.do_reduce,
                                            "delete retracts until none remains");
  retract_cmd->add_flag("--apply", retract_args.do_apply, "delete the least witness once")
      ->excludes(reduce_flag);
  retract_cmd->callback([&] { action = [&] { return run_retract(retract_args); }; });

  SubdivideArgs subdivide_args;
  auto* subdivide_cmd = app.add_subcommand("subdivide", "subdivide every edge or arc");
  subdivide_args.input.attach(subdivide_cmd);
  subdivide_cmd->add_option("--strong", subdivide_args.strong_t,
                            "replace each undirected edge by two opposite directed T-paths");
  subdivide_cmd->add_option("--weak", subdivide_args.weak_t,
                            "replace each arc by one directed T-path");
  subdivide_cmd->callback([&] { action = [&] { return run_subdivide(subdivide_args); }; });

  GenerateArgs generate_args;
  auto* generate_cmd = app.add_subcommand("generate", "emit a graph from a named family");
  generate_cmd->add_option("--spec", generate_args.spec_text, "full generator spec as JSON");
  generate_cmd->add_option("--family", generate_args.family,
                           "path | cycle | complete | star | random-tree | random-graph | "
                           "random-bipartite | tournament | random-orientation");
  generate_cmd->add_option("--n", generate_args.n, "vertex count");
  generate_cmd->add_option("--seed", generate_args.seed, "random seed");
  generate_cmd->add_option("--p", generate_args.p, "edge probability");
  generate_cmd->add_option("--of", generate_args.of_text,
                           "inner undirected spec as JSON (random-orientation)");
  auto* name_opt = generate_cmd->add_option("--name", generate_args.name, "corpus entry name");
  generate_cmd
      ->add_flag("--manifest-entry", generate_args.manifest_entry,
                 "emit a corpus manifest entry with an integrity hash")
      ->needs(name_opt);
  generate_cmd->callback([&] { action = [&] { return run_generate(generate_args); }; });

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "run every theorem check over a corpus");
  verify_cmd->add_flag("--default", verify_args.use_default,
                       "use the built-in corpus (ORIENTED_PURSUIT_CORPUS overrides)");
  verify_cmd->add_option("--manifest", verify_args.manifest, "corpus manifest file");
  verify_cmd->add_flag("--human", verify_args.human, "prose summary instead of JSON lines");
  verify_cmd->add_flag("--probe-undirected-subdivisions", verify_args.probe,
                       "append the experimental direction-blind subdivision probe");
  verify_cmd->add_flag("--inject-capture-fault", verify_args.inject_fault,
                       "self-test: break the solver's capture detection on purpose");
  add_solver_flags(verify_cmd, verify_args.solver);
  verify_cmd->callback([&] { action = [&] { return run_verify(verify_args); }; });

  InfoArgs info_args;
  auto* info_cmd = app.add_subcommand("info", "validate a graph and echo its canonical form");
  info_args.input.attach(info_cmd);
  info_cmd->add_flag("--dot", info_args.dot, "emit DOT instead of JSON");
  info_cmd->callback([&] { action = [&] { return run_info(info_args); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ResourceLimit ? 3 : 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
