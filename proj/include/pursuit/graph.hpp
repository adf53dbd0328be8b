#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pursuit/error.hpp"

namespace pursuit {

using Arc = std::pair<int, int>;
using Edge = std::pair<int, int>; // stored with first < second

std::vector<std::string> default_names(int n);

/// Simple undirected graph: dense vertex ids 0..n-1, unique text labels,
/// no loops, no multi-edges (duplicates collapse, set semantics).
class UndirectedGraph {
public:
  UndirectedGraph() = default;
  UndirectedGraph(std::vector<std::string> names, const std::vector<Edge>& edges);
  static UndirectedGraph from_edges(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const;
  std::vector<int> closed_neighbors(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  bool has_edge(int u, int v) const;
  bool adjacent(int u, int v) const { return has_edge(u, v); }

  const std::string& name(int v) const;
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;

  bool operator==(const UndirectedGraph& o) const {
    return names_ == o.names_ && edges_ == o.edges_;
  }

private:
  void check_vertex(int v) const;
  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<Edge> edges_; // sorted, first < second
  std::vector<std::vector<int>> adj_;
  std::unordered_map<std::string, int> index_;
};

/// Oriented graph: a digraph with no loops and no anti-parallel arc pair
/// {(u,v), (v,u)}. Parallel arcs in the same direction are redundant and
/// collapse to one. Construction rejects loops and anti-parallel pairs with
/// distinct errors instead of repairing the input.
class OrientedGraph {
public:
  OrientedGraph() = default;
  OrientedGraph(std::vector<std::string> names, const std::vector<Arc>& arcs);
  static OrientedGraph from_arcs(int n, const std::vector<Arc>& arcs);

  int vertex_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }

  const std::vector<int>& out_neighbors(int v) const;
  const std::vector<int>& in_neighbors(int v) const;
  /// Direction-blind neighborhood; equals the underlying graph's.
  const std::vector<int>& neighbors(int v) const;
  std::vector<int> closed_out_neighbors(int v) const;
  std::vector<int> closed_in_neighbors(int v) const;
  std::vector<int> closed_neighbors(int v) const;
  int out_degree(int v) const { return static_cast<int>(out_neighbors(v).size()); }
  int in_degree(int v) const { return static_cast<int>(in_neighbors(v).size()); }
  bool has_arc(int u, int v) const;

  const std::string& name(int v) const;
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> index_of(std::string_view name) const;

  /// Forgets directions. Never creates multi-edges because anti-parallel
  /// pairs are excluded up front.
  UndirectedGraph underlying() const;

  bool operator==(const OrientedGraph& o) const {
    return names_ == o.names_ && arcs_ == o.arcs_;
  }

private:
  void check_vertex(int v) const;
  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<Arc> arcs_; // sorted
  std::vector<std::vector<int>> out_, in_, both_;
  std::unordered_map<std::string, int> index_;
};

// --- structure predicates and measures ---

bool is_connected(const UndirectedGraph& g);
/// Connectivity of the underlying graph.
bool is_connected(const OrientedGraph& g);
bool is_strongly_connected(const OrientedGraph& g);
bool is_triangle_free(const UndirectedGraph& g);
bool is_tree(const UndirectedGraph& g);
/// Smallest d such that every subgraph has a vertex of degree <= d
/// (computed by minimum-degree peeling).
int degeneracy(const UndirectedGraph& g);
bool is_bipartite(const UndirectedGraph& g);
/// Smallest vertex v with closed out-neighborhood equal to V, if any.
std::optional<int> dominating_vertex(const OrientedGraph& g);
std::vector<int> sources(const OrientedGraph& g);
std::vector<int> sinks(const OrientedGraph& g);
/// Minimum size of a set whose closed neighborhoods cover V. Exhaustive
/// subset search; refuses graphs larger than max_vertices.
int domination_number(const UndirectedGraph& g, int max_vertices = 24);

/// Vertex-deleted subgraph. Ids above v shift down by one; names carry over.
UndirectedGraph remove_vertex(const UndirectedGraph& g, int v);
OrientedGraph remove_vertex(const OrientedGraph& g, int v);

} // namespace pursuit
