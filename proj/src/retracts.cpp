#include "pursuit/retracts.hpp"

#include <algorithm>

#include "pursuit/error.hpp"

namespace pursuit {

namespace {

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool joined(const OrientedGraph& g, int u, int v) {
  return g.has_arc(u, v) || g.has_arc(v, u);
}

bool strong_ok(const OrientedGraph& g, int v, int u) {
  return u != v && joined(g, u, v) &&
         subset(g.closed_neighbors(v), g.closed_neighbors(u));
}

bool weak_ok(const OrientedGraph& g, int v, int u) {
  return g.has_arc(u, v) && subset(g.neighbors(v), g.closed_out_neighbors(u));
}

bool corner_ok(const UndirectedGraph& g, int v, int u) {
  return u != v && subset(g.closed_neighbors(v), g.closed_neighbors(u));
}

/// The maximal cover set for v; the distributed conditions are monotone in
/// the cover set, so v is removable iff this one works.
std::vector<int> distributed_cover(const OrientedGraph& g, int v) {
  std::vector<int> p;
  for (int u : g.in_neighbors(v))
    if (subset(g.out_neighbors(v), g.out_neighbors(u))) p.push_back(u);
  return p;
}

bool distributed_ok(const OrientedGraph& g, int v, const std::vector<int>& covers) {
  if (covers.empty()) return false;
  std::vector<int> covered;
  for (int u : covers) {
    if (!g.has_arc(u, v)) return false;
    if (!subset(g.out_neighbors(v), g.out_neighbors(u))) return false;
    auto cl = g.closed_in_neighbors(u);
    covered.insert(covered.end(), cl.begin(), cl.end());
  }
  std::sort(covered.begin(), covered.end());
  return subset(g.in_neighbors(v), covered);
}

void check_vertices(int n, const RetractWitness& w) {
  if (w.removed < 0 || w.removed >= n)
    fail(ErrorKind::WitnessInvalid, "witness removes a vertex outside the graph");
  if (w.covers.empty())
    fail(ErrorKind::WitnessInvalid, "witness has no cover vertex");
  for (int u : w.covers) {
    if (u < 0 || u >= n)
      fail(ErrorKind::WitnessInvalid, "witness cover lies outside the graph");
    if (u == w.removed)
      fail(ErrorKind::WitnessInvalid, "witness covers the removed vertex with itself");
  }
}

void revalidate(const OrientedGraph& g, const RetractWitness& w) {
  check_vertices(g.vertex_count(), w);
  switch (w.kind) {
    case RetractKind::Strong:
      if (w.covers.size() != 1 || !strong_ok(g, w.removed, w.covers[0]))
        fail(ErrorKind::WitnessInvalid, "strong-retract conditions fail for vertex " +
                                            g.name(w.removed));
      return;
    case RetractKind::Distributed:
      if (!distributed_ok(g, w.removed, w.covers))
        fail(ErrorKind::WitnessInvalid,
             "distributed-retract conditions fail for vertex " + g.name(w.removed));
      return;
    case RetractKind::Weak:
      if (w.covers.size() != 1 || !weak_ok(g, w.removed, w.covers[0]))
        fail(ErrorKind::WitnessInvalid,
             "weak-retract conditions fail for vertex " + g.name(w.removed));
      return;
    case RetractKind::UndirectedCorner:
      fail(ErrorKind::WitnessInvalid, "corner witness applied to an oriented graph");
  }
  fail(ErrorKind::Internal, "bad witness kind");
}

std::vector<int> deletion_map(int n, int v) {
  std::vector<int> map(n);
  for (int i = 0; i < n; ++i) map[i] = i < v ? i : (i == v ? -1 : i - 1);
  return map;
}

} // namespace

const char* to_string(RetractKind k) {
  switch (k) {
    case RetractKind::Strong: return "strong";
    case RetractKind::Distributed: return "distributed";
    case RetractKind::Weak: return "weak";
    case RetractKind::UndirectedCorner: return "corner";
  }
  return "?";
}

RetractKind retract_kind_from_string(const std::string& s) {
  if (s == "strong") return RetractKind::Strong;
  if (s == "distributed") return RetractKind::Distributed;
  if (s == "weak") return RetractKind::Weak;
  if (s == "corner") return RetractKind::UndirectedCorner;
  fail(ErrorKind::InvalidParameter, "unknown retract kind \"" + s + "\"");
}

NamedWitness name_witness(const RetractWitness& w, const std::vector<std::string>& names) {
  NamedWitness n;
  n.kind = w.kind;
  n.removed = names.at(w.removed);
  for (int u : w.covers) n.covers.push_back(names.at(u));
  return n;
}

nlohmann::ordered_json witness_json(const NamedWitness& w) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(w.kind);
  j["removed"] = w.removed;
  j["covers"] = w.covers;
  return j;
}

nlohmann::ordered_json removals_json(const std::vector<NamedWitness>& removals) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const auto& w : removals) a.push_back(witness_json(w));
  return a;
}

std::optional<RetractWitness> find_strong_retract(const OrientedGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int u = 0; u < g.vertex_count(); ++u)
      if (strong_ok(g, v, u)) return RetractWitness{RetractKind::Strong, v, {u}};
  return std::nullopt;
}

std::optional<RetractWitness> find_distributed_retract(const OrientedGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto p = distributed_cover(g, v);
    if (!p.empty() && distributed_ok(g, v, p))
      return RetractWitness{RetractKind::Distributed, v, p};
  }
  return std::nullopt;
}

std::optional<RetractWitness> find_weak_retract(const OrientedGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int u = 0; u < g.vertex_count(); ++u)
      if (u != v && weak_ok(g, v, u)) return RetractWitness{RetractKind::Weak, v, {u}};
  return std::nullopt;
}

std::optional<RetractWitness> find_corner(const UndirectedGraph& g) {
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int u = 0; u < g.vertex_count(); ++u)
      if (corner_ok(g, v, u))
        return RetractWitness{RetractKind::UndirectedCorner, v, {u}};
  return std::nullopt;
}

std::optional<RetractWitness> find_retract(const OrientedGraph& g, RetractKind kind) {
  switch (kind) {
    case RetractKind::Strong: return find_strong_retract(g);
    case RetractKind::Distributed: return find_distributed_retract(g);
    case RetractKind::Weak: return find_weak_retract(g);
    case RetractKind::UndirectedCorner:
      fail(ErrorKind::InvalidParameter, "corner retracts need an undirected graph");
  }
  fail(ErrorKind::Internal, "bad retract kind");
}

OrientedDeletion apply_retract(const OrientedGraph& g, const RetractWitness& w) {
  revalidate(g, w);
  return {remove_vertex(g, w.removed), deletion_map(g.vertex_count(), w.removed)};
}

UndirectedDeletion apply_retract(const UndirectedGraph& g, const RetractWitness& w) {
  check_vertices(g.vertex_count(), w);
  if (w.kind != RetractKind::UndirectedCorner)
    fail(ErrorKind::WitnessInvalid, "oriented witness applied to an undirected graph");
  if (w.covers.size() != 1 || !corner_ok(g, w.removed, w.covers[0]))
    fail(ErrorKind::WitnessInvalid,
         "corner conditions fail for vertex " + g.name(w.removed));
  return {remove_vertex(g, w.removed), deletion_map(g.vertex_count(), w.removed)};
}

ReduceResult<OrientedGraph> reduce(const OrientedGraph& g, RetractKind kind) {
  ReduceResult<OrientedGraph> r{g, {}};
  while (r.graph.vertex_count() >= 2) {
    auto w = find_retract(r.graph, kind);
    if (!w) break;
    r.removals.push_back(name_witness(*w, r.graph.names()));
    r.graph = apply_retract(r.graph, *w).graph;
  }
  return r;
}

ReduceResult<UndirectedGraph> reduce(const UndirectedGraph& g, RetractKind kind) {
  if (kind != RetractKind::UndirectedCorner)
    fail(ErrorKind::InvalidParameter, "undirected graphs only reduce by corners");
  ReduceResult<UndirectedGraph> r{g, {}};
  while (r.graph.vertex_count() >= 2) {
    auto w = find_corner(r.graph);
    if (!w) break;
    r.removals.push_back(name_witness(*w, r.graph.names()));
    r.graph = apply_retract(r.graph, *w).graph;
  }
  return r;
}

bool not_copwin_condition(const OrientedGraph& g) {
  if (g.arc_count() == 0)
    fail(ErrorKind::InvalidParameter, "the not-cop-win condition needs at least one arc");
  for (auto [u, v] : g.arcs())
    if (subset(g.out_neighbors(v), g.out_neighbors(u))) return false;
  return true;
}

} // namespace pursuit
