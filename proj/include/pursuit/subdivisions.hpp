#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pursuit/graph.hpp"

namespace pursuit {

enum class SubdivisionKind { Strong, Weak };

const char* to_string(SubdivisionKind k);

/// Where a subdivision vertex came from. Interior vertices of the directed
/// path that enters `owner` are named "<owner>^<counterpart>_<index>" and
/// project to `owner`.
struct VertexRole {
  bool original = true;
  int owner = -1;       // original id (new vertices only)
  int counterpart = -1; // the path's starting original vertex
  int index = 0;        // 1-based position along the path
};

struct SubdivisionResult {
  SubdivisionKind kind = SubdivisionKind::Strong;
  int t = 2;
  OrientedGraph graph;
  std::vector<int> projection; // total: subdivided id -> original id
  std::vector<VertexRole> roles;
  std::variant<UndirectedGraph, OrientedGraph> original;
};

/// Replace every edge uv by two directed paths of t arcs each, one from u
/// to v (interiors v^u_1 .. v^u_{t-1}) and one from v to u (interiors
/// u^v_1 .. u^v_{t-1}). Output has n + 2(t-1)m vertices and 2tm arcs and is
/// a valid oriented graph for every t >= 2; t = 1 would create
/// anti-parallel pairs and is rejected.
SubdivisionResult strong_subdivide(const UndirectedGraph& g, int t);

/// Replace every arc (u,v) by one directed path of t arcs from u to v
/// (interiors v^u_1 .. v^u_{t-1}). Output has n + (t-1)m vertices and tm
/// arcs. t = 1 returns an identical copy.
SubdivisionResult weak_subdivide(const OrientedGraph& g, int t);

/// Exhaustively checks the projection property the constructions promise:
/// whenever y is reachable from x by a directed path of at most t arcs,
/// strong subdivisions have proj(y) in N[proj(x)] and proj(x) in N[proj(y)]
/// in the original graph, weak ones have proj(y) in N+[proj(x)]. Always
/// true for results the constructors built; false signals a bug.
bool check_projection_observation(const SubdivisionResult& r, SubdivisionKind kind);

nlohmann::ordered_json subdivision_json(const SubdivisionResult& r);

} // namespace pursuit
