#include "pursuit/verify.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "pursuit/error.hpp"
#include "pursuit/retracts.hpp"
#include "pursuit/subdivisions.hpp"

namespace pursuit {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// ---------------------------------------------------------------- corpus

CorpusEntry gen_entry(std::string name, const GeneratorSpec& spec) {
  return {std::move(name), generate(spec)};
}

/// Seeded instances are taken at the first seed producing a connected
/// graph, so every corpus entry satisfies the blanket connectivity
/// assumption of the claims under test.
void add_seeded_instances(std::vector<CorpusEntry>& v) {
  for (int n : {6, 7, 8})
    v.push_back(gen_entry("tree-" + std::to_string(n) + "-s1",
                          {Family::RandomTree, n, 1, 0.5, nullptr}));
  v.push_back(gen_entry("tree-8-s2", {Family::RandomTree, 8, 2, 0.5, nullptr}));
  for (int n : {5, 6})
    for (uint64_t seed = 1;; ++seed) {
      auto g = std::get<UndirectedGraph>(
          generate({Family::RandomBipartite, n, seed, 0.5, nullptr}));
      if (!is_connected(g)) continue;
      v.push_back({"bipartite-" + std::to_string(n) + "-s" + std::to_string(seed),
                   std::move(g)});
      break;
    }
  for (int n : {5, 6, 7, 8})
    for (uint64_t seed = 1;; ++seed) {
      GeneratorSpec inner{Family::RandomGraph, n, seed + 100, 0.5, nullptr};
      GeneratorSpec s{Family::RandomOrientation, n, seed, 0.5,
                      std::make_shared<GeneratorSpec>(inner)};
      auto g = std::get<OrientedGraph>(generate(s));
      if (!is_connected(g)) continue;
      v.push_back({"orientation-" + std::to_string(n) + "-s" + std::to_string(seed),
                   std::move(g)});
      break;
    }
}

/// Fifty connected seeded oriented graphs admitting a strong or distributed
/// retract, sizes cycling 4..7. The scan is deterministic: seeds count up
/// from one and misses are simply skipped.
std::vector<CorpusEntry> scan_witness_pool() {
  std::vector<CorpusEntry> v;
  uint64_t seed = 1;
  while (v.size() < 50) {
    int n = 4 + static_cast<int>(seed % 4);
    GeneratorSpec inner{Family::RandomGraph, n, seed + 1000, 0.5, nullptr};
    GeneratorSpec s{Family::RandomOrientation, n, seed, 0.5,
                    std::make_shared<GeneratorSpec>(inner)};
    ++seed;
    auto g = std::get<OrientedGraph>(generate(s));
    if (!is_connected(g)) continue;
    if (!find_strong_retract(g) && !find_distributed_retract(g)) continue;
    v.push_back({"witness-" + std::to_string(n) + "-s" + std::to_string(seed - 1),
                 std::move(g)});
  }
  return v;
}

// ---------------------------------------------------------------- checks

ordered_json base_witness(const std::string& name, const UndirectedGraph& g) {
  ordered_json w;
  w["name"] = name;
  w["graph"] = io::graph_to_json(g);
  return w;
}

ordered_json base_witness(const std::string& name, const OrientedGraph& g) {
  ordered_json w;
  w["name"] = name;
  w["graph"] = io::graph_to_json(g);
  return w;
}

/// Collects one check's result. Each instance callback returns a null JSON
/// when the claim holds and a witness object when it does not; the first
/// failure or resource skip freezes the result and later instances are
/// ignored (enumeration callbacks cannot be aborted midway).
struct Check {
  CheckResult result;
  bool stopped = false;

  explicit Check(std::string id) { result.id = std::move(id); }

  template <typename Fn>
  void instance(const std::string& name, Fn&& fn) {
    if (stopped) return;
    ++result.instances;
    try {
      ordered_json w = fn();
      if (!w.is_null()) {
        result.status = CheckStatus::Fail;
        result.witness = std::move(w);
        stopped = true;
      }
    } catch (const Error& e) {
      result.status =
          e.kind() == ErrorKind::ResourceLimit ? CheckStatus::Skip : CheckStatus::Fail;
      result.witness = ordered_json{{"name", name}, {"error", e.what()}};
      stopped = true;
    }
  }
};

/// Iteration over the corpus: named entries first, then the witness pool
/// (where asked for), then the exhaustive sweep up to the smaller of the
/// check's own cap and the corpus cap.
struct Pool {
  const Corpus& corpus;

  template <typename Fn>
  void oriented(int cap, bool with_witness_pool, Fn fn) const {
    for (const auto& e : corpus.named)
      if (auto* g = std::get_if<OrientedGraph>(&e.graph)) fn(e.name, *g);
    if (with_witness_pool)
      for (const auto& e : corpus.witness_pool)
        if (auto* g = std::get_if<OrientedGraph>(&e.graph)) fn(e.name, *g);
    int top = std::min(cap, corpus.exhaustive_oriented_max);
    for (int n = 1; n <= top; ++n) {
      int i = 0;
      enumerate_connected_oriented(n, [&](const OrientedGraph& g) {
        fn("enum-oriented-" + std::to_string(n) + "#" + std::to_string(i++), g);
      });
    }
  }

  template <typename Fn>
  void undirected(int cap, Fn fn) const {
    for (const auto& e : corpus.named)
      if (auto* g = std::get_if<UndirectedGraph>(&e.graph)) fn(e.name, *g);
    int top = std::min(cap, corpus.exhaustive_undirected_max);
    for (int n = 1; n <= top; ++n) {
      int i = 0;
      enumerate_connected_undirected(n, [&](const UndirectedGraph& g) {
        fn("enum-undirected-" + std::to_string(n) + "#" + std::to_string(i++), g);
      });
    }
  }

  template <typename Fn>
  void named_undirected(Fn fn) const {
    for (const auto& e : corpus.named)
      if (auto* g = std::get_if<UndirectedGraph>(&e.graph)) fn(e.name, *g);
  }
};

CheckResult check_chain(const Pool& p, const SolverOptions& s) {
  Check c("cop-number-chain");
  p.oriented(4, true, [&](const std::string& name, const OrientedGraph& g) {
    c.instance(name, [&]() -> ordered_json {
      auto ch = cop_number_chain(g, s);
      if (ch.c_s <= ch.c_n && ch.c_n <= ch.c_w) return nullptr;
      auto w = base_witness(name, g);
      w["strong"] = ch.c_s;
      w["normal"] = ch.c_n;
      w["weak"] = ch.c_w;
      return w;
    });
  });
  return c.result;
}

CheckResult check_retract_invariance(const Pool& p, const SolverOptions& s,
                                     RetractKind kind, std::string id) {
  Check c(std::move(id));
  p.oriented(4, true, [&](const std::string& name, const OrientedGraph& g) {
    auto w = find_retract(g, kind);
    if (!w) return; // only graphs possessing a witness are instances
    c.instance(name, [&]() -> ordered_json {
      auto h = apply_retract(g, *w).graph;
      MoveModel model = kind == RetractKind::Strong    ? MoveModel::StrongCop
                        : kind == RetractKind::Distributed ? MoveModel::NormalCop
                                                           : MoveModel::WeakCop;
      int before = cop_number(g, model, s);
      int after = cop_number(h, model, s);
      bool ok = kind == RetractKind::Weak ? (before == 1) == (after == 1)
                                          : before == after;
      if (ok) return nullptr;
      auto j = base_witness(name, g);
      j["retract"] = witness_json(name_witness(*w, g.names()));
      j["model"] = to_string(model);
      j["before"] = before;
      j["after"] = after;
      return j;
    });
  });
  return c.result;
}

CheckResult check_not_copwin(const Pool& p, const SolverOptions& s) {
  Check c("not-copwin-condition");
  p.oriented(4, true, [&](const std::string& name, const OrientedGraph& g) {
    if (g.arc_count() == 0 || !not_copwin_condition(g)) return;
    c.instance(name, [&]() -> ordered_json {
      int cn = cop_number(g, MoveModel::NormalCop, s);
      if (cn >= 2) return nullptr;
      auto w = base_witness(name, g);
      w["normal"] = cn;
      return w;
    });
  });
  return c.result;
}

CheckResult check_strong_subdivision_bounds(const Pool& p, const SolverOptions& s) {
  Check c("strong-subdivision-bounds");
  p.named_undirected([&](const std::string& name, const UndirectedGraph& g) {
    if (g.edge_count() == 0 || !is_connected(g)) return;
    for (int t : {2, 3})
      c.instance(name, [&]() -> ordered_json {
        int base = cop_number(g, s);
        auto r = strong_subdivide(g, t);
        int cs = cop_number(r.graph, MoveModel::StrongCop, s);
        int cn = cop_number(r.graph, MoveModel::NormalCop, s);
        if (base <= cs && cs <= cn && cn <= base + 1) return nullptr;
        auto w = base_witness(name, g);
        w["t"] = t;
        w["c"] = base;
        w["strong"] = cs;
        w["normal"] = cn;
        return w;
      });
  });
  return c.result;
}

CheckResult check_weak_cop_subdivision_bound(const Pool& p, const SolverOptions& s) {
  Check c("weak-cop-subdivision-bound");
  p.named_undirected([&](const std::string& name, const UndirectedGraph& g) {
    if (g.edge_count() == 0 || !is_connected(g)) return;
    c.instance(name, [&]() -> ordered_json {
      int base = cop_number(g, s);
      auto r = strong_subdivide(g, 2);
      int cw = cop_number(r.graph, MoveModel::WeakCop, s);
      if (base <= cw && cw <= base + 2) return nullptr;
      auto w = base_witness(name, g);
      w["t"] = 2;
      w["c"] = base;
      w["weak"] = cw;
      return w;
    });
  });
  return c.result;
}

CheckResult check_triangle_free_equality(const Pool& p, const SolverOptions& s) {
  Check c("triangle-free-equality");
  p.named_undirected([&](const std::string& name, const UndirectedGraph& g) {
    if (g.edge_count() == 0 || !is_connected(g) || !is_triangle_free(g)) return;
    for (int t : {2, 3})
      c.instance(name, [&]() -> ordered_json {
        int base = cop_number(g, s);
        int cs = cop_number(strong_subdivide(g, t).graph, MoveModel::StrongCop, s);
        if (base == cs) return nullptr;
        auto w = base_witness(name, g);
        w["t"] = t;
        w["c"] = base;
        w["strong"] = cs;
        return w;
      });
  });
  return c.result;
}

CheckResult check_tree_characterization(const Pool& p, const SolverOptions& s) {
  Check c("tree-characterization");
  auto run = [&](const std::string& name, const UndirectedGraph& g, int t) {
    if (g.edge_count() == 0 || !is_connected(g)) return;
    c.instance(name, [&]() -> ordered_json {
      bool copwin = is_k_copwin({strong_subdivide(g, t).graph, 1, MoveModel::StrongCop}, s);
      if (copwin == is_tree(g)) return nullptr;
      auto w = base_witness(name, g);
      w["t"] = t;
      w["tree"] = is_tree(g);
      w["strong_cop_win"] = copwin;
      return w;
    });
  };
  p.named_undirected([&](const std::string& name, const UndirectedGraph& g) {
    run(name, g, 2);
    run(name, g, 3);
  });
  int top = std::min(5, p.corpus.exhaustive_undirected_max);
  for (int n = 2; n <= top; ++n) {
    int i = 0;
    enumerate_connected_undirected(n, [&](const UndirectedGraph& g) {
      run("enum-undirected-" + std::to_string(n) + "#" + std::to_string(i++), g, 2);
    });
  }
  return c.result;
}

CheckResult check_copwin_triangle(const Pool& p, const SolverOptions& s) {
  Check c("copwin-triangle");
  p.undirected(6, [&](const std::string& name, const UndirectedGraph& g) {
    c.instance(name, [&]() -> ordered_json {
      bool by_game = solve_undirected(g, 1, s).cops_win();
      bool by_dismantling =
          reduce(g, RetractKind::UndirectedCorner).graph.vertex_count() == 1;
      bool agree = by_game == by_dismantling;
      bool claim = !by_game || is_tree(g) || !is_triangle_free(g);
      if (agree && claim) return nullptr;
      auto w = base_witness(name, g);
      w["cop_win_by_game"] = by_game;
      w["cop_win_by_dismantling"] = by_dismantling;
      w["tree"] = is_tree(g);
      w["triangle_free"] = is_triangle_free(g);
      return w;
    });
  });
  return c.result;
}

CheckResult check_weak_subdivision_monotone(const Pool& p, const SolverOptions& s) {
  Check c("weak-subdivision-monotonicity");
  p.oriented(4, false, [&](const std::string& name, const OrientedGraph& g) {
    if (g.arc_count() == 0 || !is_connected(g)) return;
    for (int t : {2, 3})
      c.instance(name, [&]() -> ordered_json {
        auto before = cop_number_chain(g, s);
        auto after = cop_number_chain(weak_subdivide(g, t).graph, s);
        if (after.c_s >= before.c_s && after.c_n >= before.c_n && after.c_w >= before.c_w)
          return nullptr;
        auto w = base_witness(name, g);
        w["t"] = t;
        w["before"] = ordered_json{{"strong", before.c_s},
                                   {"normal", before.c_n},
                                   {"weak", before.c_w}};
        w["after"] = ordered_json{
            {"strong", after.c_s}, {"normal", after.c_n}, {"weak", after.c_w}};
        return w;
      });
  });
  return c.result;
}

CheckResult check_projection_observations(const Pool& p) {
  Check c("projection-observations");
  auto strong = [&](const std::string& name, const UndirectedGraph& g, int t) {
    if (g.edge_count() == 0) return;
    c.instance(name, [&]() -> ordered_json {
      auto r = strong_subdivide(g, t);
      if (check_projection_observation(r, SubdivisionKind::Strong)) return nullptr;
      auto w = base_witness(name, g);
      w["t"] = t;
      w["kind"] = "strong";
      return w;
    });
  };
  p.named_undirected([&](const std::string& name, const UndirectedGraph& g) {
    strong(name, g, 2);
    strong(name, g, 3);
  });
  int top = std::min(5, p.corpus.exhaustive_undirected_max);
  for (int n = 2; n <= top; ++n) {
    int i = 0;
    enumerate_connected_undirected(n, [&](const UndirectedGraph& g) {
      strong("enum-undirected-" + std::to_string(n) + "#" + std::to_string(i++), g, 2);
    });
  }
  p.oriented(4, false, [&](const std::string& name, const OrientedGraph& g) {
    if (g.arc_count() == 0) return;
    for (int t : {2, 3})
      c.instance(name, [&]() -> ordered_json {
        auto r = weak_subdivide(g, t);
        if (check_projection_observation(r, SubdivisionKind::Weak)) return nullptr;
        auto w = base_witness(name, g);
        w["t"] = t;
        w["kind"] = "weak";
        return w;
      });
  });
  return c.result;
}

CheckResult check_subdivision_structure(const Pool& p) {
  Check c("subdivision-structure");
  p.undirected(6, [&](const std::string& name, const UndirectedGraph& g) {
    if (g.edge_count() == 0) return;
    c.instance(name, [&]() -> ordered_json {
      auto u = strong_subdivide(g, 2).graph.underlying();
      bool bip = is_bipartite(u);
      int deg = degeneracy(u);
      if (bip && deg <= 2) return nullptr;
      auto w = base_witness(name, g);
      w["bipartite"] = bip;
      w["degeneracy"] = deg;
      return w;
    });
  });
  return c.result;
}

CheckResult probe_undirected_subdivision(const Pool& p, const SolverOptions& s) {
  Check c("undirected-subdivision-probe");
  p.named_undirected([&](const std::string& name, const UndirectedGraph& g) {
    if (g.edge_count() == 0 || !is_connected(g)) return;
    c.instance(name, [&]() -> ordered_json {
      int base = cop_number(g, s);
      int blind = cop_number(strong_subdivide(g, 2).graph, MoveModel::Undirected, s);
      if (base == blind) return nullptr;
      auto w = base_witness(name, g);
      w["t"] = 2;
      w["c"] = base;
      w["direction_blind"] = blind;
      return w;
    });
  });
  return c.result;
}

} // namespace

Corpus default_corpus() {
  Corpus c;
  auto und = [&](std::string name, Family f, int n) {
    c.named.push_back(gen_entry(std::move(name), {f, n, 0, 0.5, nullptr}));
  };
  und("k2", Family::Path, 2);
  und("p3", Family::Path, 3);
  und("p4", Family::Path, 4);
  und("k3", Family::Complete, 3);
  und("c4", Family::Cycle, 4);
  und("c5", Family::Cycle, 5);
  und("c6", Family::Cycle, 6);
  c.named.push_back(
      {"paw", UndirectedGraph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}})});
  und("k1-4", Family::Star, 5);
  c.named.push_back({"directed-c3", OrientedGraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}})});
  c.named.push_back(
      {"directed-c4", OrientedGraph::from_arcs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})});
  c.named.push_back(
      {"tournament-3-cyclic", OrientedGraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}})});
  c.named.push_back(
      {"tournament-3-transitive", OrientedGraph::from_arcs(3, {{0, 1}, {0, 2}, {1, 2}})});
  add_seeded_instances(c.named);
  c.witness_pool = scan_witness_pool();
  return c;
}

Corpus corpus_from_json(const json& manifest) {
  if (!manifest.is_object())
    fail(ErrorKind::Parse, "corpus manifest must be a JSON object");
  Corpus c;
  c.exhaustive_undirected_max = manifest.value("exhaustive_undirected_max", 0);
  c.exhaustive_oriented_max = manifest.value("exhaustive_oriented_max", 0);
  std::set<std::string> seen;
  auto read_entries = [&](const char* key, std::vector<CorpusEntry>& out) {
    if (!manifest.contains(key)) return;
    if (!manifest.at(key).is_array())
      fail(ErrorKind::Parse, std::string("\"") + key + "\" must be an array");
    for (const auto& j : manifest.at(key)) {
      if (!j.is_object() || !j.contains("name") || !j.at("name").is_string())
        fail(ErrorKind::Parse, "every corpus entry needs a string \"name\"");
      CorpusEntry e;
      e.name = j.at("name").get<std::string>();
      if (!seen.insert(e.name).second)
        fail(ErrorKind::Parse, "duplicate corpus entry \"" + e.name + "\"");
      bool has_graph = j.contains("graph"), has_gen = j.contains("generator");
      if (has_graph == has_gen)
        fail(ErrorKind::Parse,
             "entry \"" + e.name + "\" needs exactly one of \"graph\" or \"generator\"");
      e.graph = has_graph ? io::graph_from_json(j.at("graph"))
                          : generate(spec_from_json(j.at("generator")));
      if (j.contains("sha256")) {
        auto want = j.at("sha256").get<std::string>();
        auto got = io::sha256_hex(io::to_canonical_json(e.graph));
        if (want != got)
          fail(ErrorKind::Parse, "entry \"" + e.name + "\": expected sha256 " + want +
                                     " but the graph hashes to " + got);
      }
      out.push_back(std::move(e));
    }
  };
  read_entries("graphs", c.named);
  read_entries("witness_pool", c.witness_pool);
  return c;
}

Corpus load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open \"" + path + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  json j = json::parse(buf.str(), nullptr, false);
  if (j.is_discarded()) fail(ErrorKind::Parse, "malformed JSON in \"" + path + "\"");
  return corpus_from_json(j);
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

std::vector<CheckResult> run_all(const Corpus& corpus, const VerifyOptions& options) {
  std::vector<CheckResult> out;
  if (corpus.empty()) return out;
  Pool p{corpus};
  const SolverOptions& s = options.solver;
  out.push_back(check_chain(p, s));
  out.push_back(check_retract_invariance(p, s, RetractKind::Strong,
                                         "strong-retract-invariance"));
  out.push_back(check_retract_invariance(p, s, RetractKind::Distributed,
                                         "distributed-retract-invariance"));
  out.push_back(
      check_retract_invariance(p, s, RetractKind::Weak, "weak-retract-copwin-invariance"));
  out.push_back(check_not_copwin(p, s));
  out.push_back(check_strong_subdivision_bounds(p, s));
  out.push_back(check_weak_cop_subdivision_bound(p, s));
  out.push_back(check_triangle_free_equality(p, s));
  out.push_back(check_tree_characterization(p, s));
  out.push_back(check_copwin_triangle(p, s));
  out.push_back(check_weak_subdivision_monotone(p, s));
  out.push_back(check_projection_observations(p));
  out.push_back(check_subdivision_structure(p));
  if (options.probe_undirected_subdivision)
    out.push_back(probe_undirected_subdivision(p, s));
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::none_of(results.begin(), results.end(), [](const CheckResult& r) {
    return r.status == CheckStatus::Fail;
  });
}

std::string report_jsonl(const std::vector<CheckResult>& results) {
  std::string out;
  for (const auto& r : results) {
    ordered_json j;
    j["check"] = r.id;
    j["status"] = to_string(r.status);
    j["instances"] = r.instances;
    if (!r.witness.is_null()) j["witness"] = r.witness;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string human_summary(const std::vector<CheckResult>& results) {
  size_t width = 5;
  for (const auto& r : results) width = std::max(width, r.id.size());
  std::ostringstream out;
  int pass = 0, failed = 0, skip = 0;
  for (const auto& r : results) {
    (r.status == CheckStatus::Pass ? pass
     : r.status == CheckStatus::Fail ? failed
                                     : skip)++;
    out << r.id << std::string(width - r.id.size() + 2, ' ') << to_string(r.status)
        << "  (" << r.instances << (r.instances == 1 ? " instance)" : " instances)");
    if (r.status != CheckStatus::Pass && !r.witness.is_null() &&
        r.witness.contains("name"))
      out << "  at " << r.witness.at("name").get<std::string>();
    out << '\n';
  }
  out << results.size() << " checks: " << pass << " passed, " << failed << " failed, "
      << skip << " skipped\n";
  return out.str();
}

} // namespace pursuit
