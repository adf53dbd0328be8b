#include "pursuit/subdivisions.hpp"

#include <algorithm>

#include "pursuit/error.hpp"
#include "pursuit/graph_io.hpp"

namespace pursuit {

namespace {

std::string interior_name(const std::string& owner, const std::string& counterpart,
                          int index) {
  return owner + "^" + counterpart + "_" + std::to_string(index);
}

/// Appends the interior vertices of one directed path from `from` to `to`
/// and its t arcs. Interiors are named after (and project to) `to`.
void add_path(int from, int to, int t, const std::vector<std::string>& base_names,
              std::vector<std::string>& names, std::vector<Arc>& arcs,
              std::vector<int>& projection, std::vector<VertexRole>& roles) {
  int prev = from;
  for (int i = 1; i < t; ++i) {
    int fresh = static_cast<int>(names.size());
    names.push_back(interior_name(base_names[to], base_names[from], i));
    projection.push_back(to);
    roles.push_back({false, to, from, i});
    arcs.push_back({prev, fresh});
    prev = fresh;
  }
  arcs.push_back({prev, to});
}

void seed_originals(int n, const std::vector<std::string>& base_names,
                    std::vector<std::string>& names, std::vector<int>& projection,
                    std::vector<VertexRole>& roles) {
  names = base_names;
  projection.resize(n);
  roles.assign(n, VertexRole{});
  for (int v = 0; v < n; ++v) projection[v] = v;
}

} // namespace

const char* to_string(SubdivisionKind k) {
  return k == SubdivisionKind::Strong ? "strong" : "weak";
}

SubdivisionResult strong_subdivide(const UndirectedGraph& g, int t) {
  if (t < 2)
    fail(ErrorKind::InvalidParameter,
         "strong subdivision needs t >= 2; t = " + std::to_string(t) +
             " would create anti-parallel arcs");
  SubdivisionResult r;
  r.kind = SubdivisionKind::Strong;
  r.t = t;
  r.original = g;
  std::vector<std::string> names;
  std::vector<Arc> arcs;
  seed_originals(g.vertex_count(), g.names(), names, r.projection, r.roles);
  for (auto [u, v] : g.edges()) {
    add_path(u, v, t, g.names(), names, arcs, r.projection, r.roles);
    add_path(v, u, t, g.names(), names, arcs, r.projection, r.roles);
  }
  r.graph = OrientedGraph(std::move(names), arcs);
  return r;
}

SubdivisionResult weak_subdivide(const OrientedGraph& g, int t) {
  if (t < 1)
    fail(ErrorKind::InvalidParameter, "weak subdivision needs t >= 1");
  SubdivisionResult r;
  r.kind = SubdivisionKind::Weak;
  r.t = t;
  r.original = g;
  std::vector<std::string> names;
  std::vector<Arc> arcs;
  seed_originals(g.vertex_count(), g.names(), names, r.projection, r.roles);
  for (auto [u, v] : g.arcs())
    add_path(u, v, t, g.names(), names, arcs, r.projection, r.roles);
  r.graph = OrientedGraph(std::move(names), arcs);
  return r;
}

bool check_projection_observation(const SubdivisionResult& r, SubdivisionKind kind) {
  if (kind != r.kind)
    fail(ErrorKind::InvalidParameter, "projection check asked for the wrong kind");
  bool strong = kind == SubdivisionKind::Strong;
  if (strong && !std::holds_alternative<UndirectedGraph>(r.original))
    fail(ErrorKind::InvalidParameter, "strong subdivision must come from an undirected graph");
  if (!strong && !std::holds_alternative<OrientedGraph>(r.original))
    fail(ErrorKind::InvalidParameter, "weak subdivision must come from an oriented graph");

  const auto& h = r.graph;
  int n = h.vertex_count();
  std::vector<int> dist(n);
  std::vector<int> queue;
  for (int x = 0; x < n; ++x) {
    // out-BFS to depth t
    std::fill(dist.begin(), dist.end(), -1);
    queue.assign(1, x);
    dist[x] = 0;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int y = queue[qi];
      if (dist[y] == r.t) continue;
      for (int z : h.out_neighbors(y))
        if (dist[z] < 0) {
          dist[z] = dist[y] + 1;
          queue.push_back(z);
        }
    }
    int px = r.projection[x];
    for (int y : queue) {
      int py = r.projection[y];
      if (strong) {
        const auto& g = std::get<UndirectedGraph>(r.original);
        if (px != py && !g.has_edge(px, py)) return false;
      } else {
        const auto& g = std::get<OrientedGraph>(r.original);
        if (px != py && !g.has_arc(px, py)) return false;
      }
    }
  }
  return true;
}

nlohmann::ordered_json subdivision_json(const SubdivisionResult& r) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(r.kind);
  j["t"] = r.t;
  j["graph"] = io::graph_to_json(r.graph);
  nlohmann::ordered_json proj = nlohmann::ordered_json::object();
  for (int v = 0; v < r.graph.vertex_count(); ++v)
    proj[r.graph.name(v)] = r.graph.name(r.projection[v]);
  j["projection"] = std::move(proj);
  nlohmann::ordered_json roles = nlohmann::ordered_json::array();
  for (int v = 0; v < r.graph.vertex_count(); ++v) {
    nlohmann::ordered_json e;
    e["vertex"] = r.graph.name(v);
    if (r.roles[v].original) {
      e["role"] = "original";
    } else {
      e["role"] = "new";
      e["owner"] = r.graph.name(r.roles[v].owner);
      e["counterpart"] = r.graph.name(r.roles[v].counterpart);
      e["index"] = r.roles[v].index;
    }
    roles.push_back(std::move(e));
  }
  j["roles"] = std::move(roles);
  return j;
}

} // namespace pursuit
