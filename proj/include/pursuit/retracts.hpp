#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pursuit/graph.hpp"

namespace pursuit {

/// The four single-vertex reductions. Neighborhood containments licensing
/// them (v removed, u or u_1..u_p covering):
///
///   Strong:           u,v joined by an arc and N[v] subset of N[u],
///                     direction-blind
///   Distributed:      each u_i->v an arc with N+(v) subset of N+(u_i), and
///                     N-(v) covered by the union of the N-[u_i]
///   Weak:             arc u->v with N(v) subset of N+[u]
///   UndirectedCorner: N[v] subset of N[u] in an undirected graph
enum class RetractKind { Strong, Distributed, Weak, UndirectedCorner };

const char* to_string(RetractKind k);
RetractKind retract_kind_from_string(const std::string& s);

struct RetractWitness {
  RetractKind kind = RetractKind::Strong;
  int removed = 0;
  std::vector<int> covers; // nonempty; singleton except for Distributed

  bool operator==(const RetractWitness&) const = default;
};

/// Witness with vertex ids resolved to names, for reports that outlive the
/// graph they were found in.
struct NamedWitness {
  RetractKind kind = RetractKind::Strong;
  std::string removed;
  std::vector<std::string> covers;
};

nlohmann::ordered_json witness_json(const NamedWitness& w);
NamedWitness name_witness(const RetractWitness& w, const std::vector<std::string>& names);

/// Finders return the lexicographically least witness: smallest removed
/// vertex, then smallest cover (Distributed covers are the maximal valid
/// set for the chosen vertex). All run in polynomial time.
std::optional<RetractWitness> find_strong_retract(const OrientedGraph& g);
std::optional<RetractWitness> find_distributed_retract(const OrientedGraph& g);
std::optional<RetractWitness> find_weak_retract(const OrientedGraph& g);
std::optional<RetractWitness> find_corner(const UndirectedGraph& g);
std::optional<RetractWitness> find_retract(const OrientedGraph& g, RetractKind kind);

struct OrientedDeletion {
  OrientedGraph graph;
  std::vector<int> old_to_new; // removed vertex maps to -1
};
struct UndirectedDeletion {
  UndirectedGraph graph;
  std::vector<int> old_to_new;
};

/// Delete the witnessed vertex. The witness is revalidated against g first;
/// a stale or fabricated witness raises ErrorKind::WitnessInvalid.
OrientedDeletion apply_retract(const OrientedGraph& g, const RetractWitness& w);
UndirectedDeletion apply_retract(const UndirectedGraph& g, const RetractWitness& w);

template <typename Graph>
struct ReduceResult {
  Graph graph; // irreducible residue
  std::vector<NamedWitness> removals; // in removal order
};

/// Exhaustively applies retracts of one kind until none remains (or one
/// vertex is left). Deterministic: each step removes the least witness.
ReduceResult<OrientedGraph> reduce(const OrientedGraph& g, RetractKind kind);
ReduceResult<UndirectedGraph> reduce(const UndirectedGraph& g, RetractKind kind);

nlohmann::ordered_json removals_json(const std::vector<NamedWitness>& removals);

/// True iff every arc (u,v) leaves the robber an escape: some out-neighbor
/// of v is not an out-neighbor of u. A true answer certifies that one cop
/// cannot win the normal game. Requires at least one arc.
bool not_copwin_condition(const OrientedGraph& g);

} // namespace pursuit
