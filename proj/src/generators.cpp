#include "pursuit/generators.hpp"

#include <algorithm>

#include "pursuit/error.hpp"

namespace pursuit {

namespace {

/// Canonical pair order: (0,1), (0,2), (1,2), (0,3), ... — all pairs with
/// larger endpoint j listed after those with smaller j.
std::vector<Edge> pair_order(int n) {
  std::vector<Edge> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.push_back({i, j});
  return pairs;
}

void need(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::InvalidParameter, what);
}

UndirectedGraph prufer_tree(int n, SplitMix64& rng) {
  // Decode a random Prufer sequence; every labeled tree is equally likely.
  if (n == 2) return UndirectedGraph::from_edges(2, {{0, 1}});
  std::vector<int> seq(n - 2);
  for (auto& s : seq) s = static_cast<int>(rng.below(n));
  std::vector<int> degree(n, 1);
  for (int s : seq) ++degree[s];
  std::vector<Edge> edges;
  // smallest leaf joins the next sequence entry
  std::vector<bool> used(n, false);
  for (int s : seq) {
    int leaf = -1;
    for (int v = 0; v < n; ++v)
      if (degree[v] == 1 && !used[v]) {
        leaf = v;
        break;
      }
    used[leaf] = true;
    --degree[s];
    edges.push_back({std::min(leaf, s), std::max(leaf, s)});
  }
  std::vector<int> last;
  for (int v = 0; v < n; ++v)
    if (!used[v] && degree[v] == 1) last.push_back(v);
  edges.push_back({last[0], last[1]});
  return UndirectedGraph::from_edges(n, edges);
}

} // namespace

const char* to_string(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::Star: return "star";
    case Family::RandomTree: return "random-tree";
    case Family::RandomGraph: return "random-graph";
    case Family::RandomBipartite: return "random-bipartite";
    case Family::Tournament: return "tournament";
    case Family::RandomOrientation: return "random-orientation";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  for (Family f : {Family::Path, Family::Cycle, Family::Complete, Family::Star,
                   Family::RandomTree, Family::RandomGraph, Family::RandomBipartite,
                   Family::Tournament, Family::RandomOrientation})
    if (s == to_string(f)) return f;
  fail(ErrorKind::InvalidParameter, "unknown generator family \"" + s + "\"");
}

GraphVariant generate(const GeneratorSpec& spec) {
  int n = spec.n;
  need(n >= 2, "generator size must be at least 2");
  need(spec.p >= 0.0 && spec.p <= 1.0, "probability must lie in [0,1]");
  SplitMix64 rng(spec.seed);
  switch (spec.family) {
    case Family::Path: {
      std::vector<Edge> edges;
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      return UndirectedGraph::from_edges(n, edges);
    }
    case Family::Cycle: {
      need(n >= 3, "a cycle needs at least 3 vertices");
      std::vector<Edge> edges;
      for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      edges.push_back({0, n - 1});
      return UndirectedGraph::from_edges(n, edges);
    }
    case Family::Complete:
      return UndirectedGraph::from_edges(n, pair_order(n));
    case Family::Star: {
      std::vector<Edge> edges;
      for (int i = 1; i < n; ++i) edges.push_back({0, i});
      return UndirectedGraph::from_edges(n, edges);
    }
    case Family::RandomTree:
      return prufer_tree(n, rng);
    case Family::RandomGraph: {
      std::vector<Edge> edges;
      for (auto e : pair_order(n))
        if (rng.unit() < spec.p) edges.push_back(e);
      return UndirectedGraph::from_edges(n, edges);
    }
    case Family::RandomBipartite: {
      // parts {0 .. ceil(n/2)-1} and the rest; only cross pairs are drawn
      int split = (n + 1) / 2;
      std::vector<Edge> edges;
      for (auto [i, j] : pair_order(n))
        if ((i < split) != (j < split) && rng.unit() < spec.p) edges.push_back({i, j});
      return UndirectedGraph::from_edges(n, edges);
    }
    case Family::Tournament: {
      std::vector<Arc> arcs;
      for (auto [i, j] : pair_order(n))
        arcs.push_back(rng.coin() ? Arc{i, j} : Arc{j, i});
      return OrientedGraph::from_arcs(n, arcs);
    }
    case Family::RandomOrientation: {
      need(spec.of != nullptr, "random-orientation needs an inner spec");
      need(spec.of->family != Family::Tournament &&
               spec.of->family != Family::RandomOrientation,
           "random-orientation wraps an undirected family");
      need(spec.of->n == n, "inner and outer sizes must agree");
      auto inner = generate(*spec.of);
      const auto& g = std::get<UndirectedGraph>(inner);
      std::vector<Arc> arcs;
      for (auto [u, v] : g.edges())
        arcs.push_back(rng.coin() ? Arc{u, v} : Arc{v, u});
      return OrientedGraph::from_arcs(n, arcs);
    }
  }
  fail(ErrorKind::Internal, "bad family");
}

nlohmann::ordered_json spec_json(const GeneratorSpec& spec) {
  nlohmann::ordered_json j;
  j["family"] = to_string(spec.family);
  j["n"] = spec.n;
  j["seed"] = spec.seed;
  if (spec.family == Family::RandomGraph || spec.family == Family::RandomBipartite)
    j["p"] = spec.p;
  if (spec.of) j["of"] = spec_json(*spec.of);
  return j;
}

GeneratorSpec spec_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("family") || !j.contains("n"))
    fail(ErrorKind::Parse, "generator spec needs \"family\" and \"n\"");
  GeneratorSpec s;
  s.family = family_from_string(j.at("family").get<std::string>());
  s.n = j.at("n").get<int>();
  if (j.contains("seed")) s.seed = j.at("seed").get<uint64_t>();
  if (j.contains("p")) s.p = j.at("p").get<double>();
  if (j.contains("of")) s.of = std::make_shared<GeneratorSpec>(spec_from_json(j.at("of")));
  return s;
}

namespace {

template <typename Part>
void enumerate_masks(int n, uint64_t cap, const std::string& what, const Part& emit) {
  // iterate all pair assignments; emit filters connectivity
  if (n < 1) fail(ErrorKind::InvalidParameter, "enumeration needs n >= 1");
  uint64_t total = 1;
  int pairs = n * (n - 1) / 2;
  for (int i = 0; i < pairs; ++i) {
    if (total > cap) fail(ErrorKind::ResourceLimit, what);
    total *= emit.base;
  }
  if (total > cap) fail(ErrorKind::ResourceLimit, what);
  for (uint64_t code = 0; code < total; ++code) emit(code);
}

} // namespace

void enumerate_connected_undirected(int n,
                                    const std::function<void(const UndirectedGraph&)>& fn) {
  if (n > 7)
    fail(ErrorKind::ResourceLimit, "undirected enumeration is capped at n = 7");
  auto pairs = pair_order(n);
  struct Emit {
    int base = 2;
    int n;
    const std::vector<Edge>& pairs;
    const std::function<void(const UndirectedGraph&)>& fn;
    void operator()(uint64_t code) const {
      std::vector<Edge> edges;
      for (const auto& pr : pairs) {
        if (code & 1) edges.push_back(pr);
        code >>= 1;
      }
      auto g = UndirectedGraph::from_edges(n, edges);
      if (is_connected(g)) fn(g);
    }
  } emit{2, n, pairs, fn};
  enumerate_masks(n, uint64_t(1) << 62, "undirected enumeration too large", emit);
}

void enumerate_connected_oriented(int n,
                                  const std::function<void(const OrientedGraph&)>& fn) {
  if (n > 5) fail(ErrorKind::ResourceLimit, "oriented enumeration is capped at n = 5");
  auto pairs = pair_order(n);
  struct Emit {
    int base = 3;
    int n;
    const std::vector<Edge>& pairs;
    const std::function<void(const OrientedGraph&)>& fn;
    void operator()(uint64_t code) const {
      std::vector<Arc> arcs;
      for (auto [i, j] : pairs) {
        switch (code % 3) {
          case 1: arcs.push_back({i, j}); break;
          case 2: arcs.push_back({j, i}); break;
          default: break;
        }
        code /= 3;
      }
      auto g = OrientedGraph::from_arcs(n, arcs);
      if (is_connected(g)) fn(g);
    }
  } emit{3, n, pairs, fn};
  enumerate_masks(n, uint64_t(1) << 62, "oriented enumeration too large", emit);
}

uint64_t count_connected_undirected(int n) {
  uint64_t c = 0;
  enumerate_connected_undirected(n, [&](const UndirectedGraph&) { ++c; });
  return c;
}

uint64_t count_connected_oriented(int n) {
  uint64_t c = 0;
  enumerate_connected_oriented(n, [&](const OrientedGraph&) { ++c; });
  return c;
}

} // namespace pursuit
