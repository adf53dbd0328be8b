#include "pursuit/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace pursuit {

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  return names;
}

namespace {

std::unordered_map<std::string, int> build_index(const std::vector<std::string>& names) {
  std::unordered_map<std::string, int> index;
  index.reserve(names.size());
  for (int i = 0; i < static_cast<int>(names.size()); ++i) {
    if (names[i].empty())
      fail(ErrorKind::GraphInvalid, "vertex " + std::to_string(i) + " has an empty name");
    auto [it, inserted] = index.emplace(names[i], i);
    if (!inserted)
      fail(ErrorKind::GraphInvalid, "duplicate vertex name \"" + names[i] + "\"");
  }
  return index;
}

void sort_unique(std::vector<int>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

} // namespace

// --- UndirectedGraph ---

UndirectedGraph::UndirectedGraph(std::vector<std::string> names,
                                 const std::vector<Edge>& edges)
    : n_(static_cast<int>(names.size())), names_(std::move(names)) {
  index_ = build_index(names_);
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      fail(ErrorKind::InvalidVertex,
           "edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
    if (u == v)
      fail(ErrorKind::GraphLoop, "loop edge at vertex \"" + names_[u] + "\"");
    seen.insert({std::min(u, v), std::max(u, v)});
  }
  edges_.assign(seen.begin(), seen.end());
  adj_.assign(n_, {});
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& a : adj_) sort_unique(a);
}

UndirectedGraph UndirectedGraph::from_edges(int n, const std::vector<Edge>& edges) {
  return UndirectedGraph(default_names(n), edges);
}

void UndirectedGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    fail(ErrorKind::InvalidVertex, "vertex " + std::to_string(v) + " out of range");
}

const std::vector<int>& UndirectedGraph::neighbors(int v) const {
  check_vertex(v);
  return adj_[v];
}

std::vector<int> UndirectedGraph::closed_neighbors(int v) const {
  std::vector<int> r = neighbors(v);
  r.insert(std::lower_bound(r.begin(), r.end(), v), v);
  return r;
}

bool UndirectedGraph::has_edge(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

const std::string& UndirectedGraph::name(int v) const {
  check_vertex(v);
  return names_[v];
}

std::optional<int> UndirectedGraph::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

// --- OrientedGraph ---

OrientedGraph::OrientedGraph(std::vector<std::string> names, const std::vector<Arc>& arcs)
    : n_(static_cast<int>(names.size())), names_(std::move(names)) {
  index_ = build_index(names_);
  std::set<Arc> seen;
  for (auto [u, v] : arcs) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
      fail(ErrorKind::InvalidVertex,
           "arc (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range");
    if (u == v)
      fail(ErrorKind::GraphLoop, "loop arc at vertex \"" + names_[u] + "\"");
    seen.insert({u, v}); // same-direction duplicates are redundant
  }
  for (auto [u, v] : seen) {
    if (seen.count({v, u}) && u < v)
      fail(ErrorKind::GraphAntiparallel,
           "anti-parallel arcs between \"" + names_[u] + "\" and \"" + names_[v] + "\"");
  }
  arcs_.assign(seen.begin(), seen.end());
  out_.assign(n_, {});
  in_.assign(n_, {});
  both_.assign(n_, {});
  for (auto [u, v] : arcs_) {
    out_[u].push_back(v);
    in_[v].push_back(u);
    both_[u].push_back(v);
    both_[v].push_back(u);
  }
  for (auto& a : out_) sort_unique(a);
  for (auto& a : in_) sort_unique(a);
  for (auto& a : both_) sort_unique(a);
}

OrientedGraph OrientedGraph::from_arcs(int n, const std::vector<Arc>& arcs) {
  return OrientedGraph(default_names(n), arcs);
}

void OrientedGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    fail(ErrorKind::InvalidVertex, "vertex " + std::to_string(v) + " out of range");
}

const std::vector<int>& OrientedGraph::out_neighbors(int v) const {
  check_vertex(v);
  return out_[v];
}

const std::vector<int>& OrientedGraph::in_neighbors(int v) const {
  check_vertex(v);
  return in_[v];
}

const std::vector<int>& OrientedGraph::neighbors(int v) const {
  check_vertex(v);
  return both_[v];
}

namespace {
std::vector<int> with_self(const std::vector<int>& a, int v) {
  std::vector<int> r = a;
  r.insert(std::lower_bound(r.begin(), r.end(), v), v);
  return r;
}
} // namespace

std::vector<int> OrientedGraph::closed_out_neighbors(int v) const {
  return with_self(out_neighbors(v), v);
}

std::vector<int> OrientedGraph::closed_in_neighbors(int v) const {
  return with_self(in_neighbors(v), v);
}

std::vector<int> OrientedGraph::closed_neighbors(int v) const {
  return with_self(neighbors(v), v);
}

bool OrientedGraph::has_arc(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& a = out_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

const std::string& OrientedGraph::name(int v) const {
  check_vertex(v);
  return names_[v];
}

std::optional<int> OrientedGraph::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

UndirectedGraph OrientedGraph::underlying() const {
  std::vector<Edge> edges;
  edges.reserve(arcs_.size());
  for (auto [u, v] : arcs_) edges.push_back({std::min(u, v), std::max(u, v)});
  return UndirectedGraph(names_, edges);
}

// --- predicates ---

namespace {

int reachable_count(int n, int start, const std::function<const std::vector<int>&(int)>& succ) {
  std::vector<char> seen(n, 0);
  std::vector<int> stack = {start};
  seen[start] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : succ(v))
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count;
}

} // namespace

bool is_connected(const UndirectedGraph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  return reachable_count(n, 0, [&](int v) -> const std::vector<int>& {
           return g.neighbors(v);
         }) == n;
}

bool is_connected(const OrientedGraph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  return reachable_count(n, 0, [&](int v) -> const std::vector<int>& {
           return g.neighbors(v);
         }) == n;
}

bool is_strongly_connected(const OrientedGraph& g) {
  int n = g.vertex_count();
  if (n <= 1) return true;
  auto fwd = reachable_count(n, 0, [&](int v) -> const std::vector<int>& {
    return g.out_neighbors(v);
  });
  auto bwd = reachable_count(n, 0, [&](int v) -> const std::vector<int>& {
    return g.in_neighbors(v);
  });
  return fwd == n && bwd == n;
}

bool is_triangle_free(const UndirectedGraph& g) {
  for (auto [u, v] : g.edges())
    for (int w : g.neighbors(u))
      if (w != v && g.has_edge(v, w)) return false;
  return true;
}

bool is_tree(const UndirectedGraph& g) {
  return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 &&
         is_connected(g);
}

int degeneracy(const UndirectedGraph& g) {
  int n = g.vertex_count();
  std::vector<int> deg(n);
  std::vector<char> removed(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  int result = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
    result = std::max(result, deg[best]);
    removed[best] = 1;
    for (int w : g.neighbors(best))
      if (!removed[w]) --deg[w];
  }
  return result;
}

bool is_bipartite(const UndirectedGraph& g) {
  int n = g.vertex_count();
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::vector<int> stack = {s};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : g.neighbors(v)) {
        if (color[w] == -1) {
          color[w] = color[v] ^ 1;
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<int> dominating_vertex(const OrientedGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.out_degree(v) == g.vertex_count() - 1) return v;
  return std::nullopt;
}

std::vector<int> sources(const OrientedGraph& g) {
  std::vector<int> r;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.in_degree(v) == 0) r.push_back(v);
  return r;
}

std::vector<int> sinks(const OrientedGraph& g) {
  std::vector<int> r;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.out_degree(v) == 0) r.push_back(v);
  return r;
}

int domination_number(const UndirectedGraph& g, int max_vertices) {
  int n = g.vertex_count();
  if (n == 0) return 0;
  if (n > max_vertices)
    fail(ErrorKind::ResourceLimit,
         "domination_number: " + std::to_string(n) + " vertices exceeds cap of " +
             std::to_string(max_vertices));
  std::vector<uint32_t> cover(n);
  for (int v = 0; v < n; ++v) {
    uint32_t m = 1u << v;
    for (int w : g.neighbors(v)) m |= 1u << w;
    cover[v] = m;
  }
  const uint32_t all = n == 32 ? ~0u : (1u << n) - 1;
  for (int size = 1; size <= n; ++size) {
    // enumerate size-subsets as an increasing index tuple
    std::vector<int> idx(size);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      uint32_t m = 0;
      for (int i : idx) m |= cover[i];
      if (m == all) return size;
      int p = size - 1;
      while (p >= 0 && idx[p] == n - size + p) --p;
      if (p < 0) break;
      ++idx[p];
      for (int q = p + 1; q < size; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
  fail(ErrorKind::Internal, "domination_number: no dominating set found");
}

namespace {
template <typename G, typename Pairs>
std::pair<std::vector<std::string>, std::vector<std::pair<int, int>>>
deleted_parts(const G& g, int v, const Pairs& pairs) {
  std::vector<std::string> names;
  names.reserve(g.vertex_count() - 1);
  for (int i = 0; i < g.vertex_count(); ++i)
    if (i != v) names.push_back(g.name(i));
  std::vector<std::pair<int, int>> rest;
  for (auto [a, b] : pairs) {
    if (a == v || b == v) continue;
    rest.push_back({a - (a > v), b - (b > v)});
  }
  return {std::move(names), std::move(rest)};
}
} // namespace

UndirectedGraph remove_vertex(const UndirectedGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    fail(ErrorKind::InvalidVertex, "remove_vertex: vertex out of range");
  auto [names, edges] = deleted_parts(g, v, g.edges());
  return UndirectedGraph(std::move(names), edges);
}

OrientedGraph remove_vertex(const OrientedGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count())
    fail(ErrorKind::InvalidVertex, "remove_vertex: vertex out of range");
  auto [names, arcs] = deleted_parts(g, v, g.arcs());
  return OrientedGraph(std::move(names), arcs);
}

} // namespace pursuit
