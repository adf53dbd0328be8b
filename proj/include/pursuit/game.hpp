#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pursuit/graph.hpp"

namespace pursuit {

/// Who moves how. A strong move goes to any neighbor regardless of arc
/// direction; a weak move only follows arcs. Staying put is always allowed.
///
///   StrongCop:  cops move strong, robber moves weak
///   NormalCop:  both move weak
///   WeakCop:    cops move weak, robber moves strong
///   Undirected: both move strong (the classical game on the underlying graph)
enum class MoveModel { StrongCop, NormalCop, WeakCop, Undirected };

const char* to_string(MoveModel m);
MoveModel move_model_from_string(const std::string& s);

/// One play position: the cops' vertices (a sorted multiset - several cops
/// may share a vertex), the robber's vertex, and whose turn it is.
///
/// Rules of play: the k cops pick a placement first, then the robber places
/// knowing it (placing on a cop loses immediately). Each round the cops all
/// move simultaneously, capture is checked, then the robber moves and capture
/// is checked again. The robber wins any infinite play.
struct Configuration {
  std::vector<int> cops; // sorted, size k
  int robber = 0;
  bool cop_turn = true;
};

struct GameSpec {
  OrientedGraph graph;
  int k = 1;
  MoveModel model = MoveModel::NormalCop;
};

enum class Engine { Auto, Serial, Parallel };

struct SolverOptions {
  /// Upper bound on |positions| = multisets(n, k) * n * 2.
  uint64_t arena_cap = 50'000'000;
  Engine engine = Engine::Auto;
  /// 0 = no limit. Checked between solver passes.
  double timeout_seconds = 0;
  /// Fault injection for harness self-tests: the solver stops recognizing a
  /// robber sharing a vertex with a cop as captured. Never set in real use.
  bool disable_capture_detection = false;
};

/// Move sets under a model; sorted and including v itself.
std::vector<int> cop_move_set(const OrientedGraph& g, MoveModel m, int v);
std::vector<int> robber_move_set(const OrientedGraph& g, MoveModel m, int v);

/// A fully solved game: which positions the cops win, and how many rounds
/// optimal play needs from each of them. Ranks count cop moves; the robber's
/// best replies maximize them, the cops' choices minimize them.
class Solution {
public:
  bool cops_win() const { return overall_win_; }
  int vertex_count() const { return n_; }
  int k() const { return k_; }
  uint64_t position_count() const; // both turns

  bool cop_turn_won(const std::vector<int>& cops, int robber) const;
  bool robber_turn_won(const std::vector<int>& cops, int robber) const;
  /// Rounds to capture from a cop-turn position under optimal play.
  int rank(const std::vector<int>& cops, int robber) const;

  /// Best first placement: wins against every robber placement and minimizes
  /// the worst-case rank, ties broken by the smallest tuple.
  const std::vector<int>& best_placement() const;
  /// Worst-case rounds to capture from the best placement.
  int start_rank() const { return start_rank_; }

  struct Impl;
  explicit Solution(std::shared_ptr<Impl> impl);
  const Impl& impl() const { return *impl_; }

private:
  std::shared_ptr<Impl> impl_;
  int n_ = 0, k_ = 0;
  bool overall_win_ = false;
  std::vector<int> best_placement_;
  int start_rank_ = 0;
};

/// Solve the whole arena. Throws ErrorKind::ResourceLimit if it exceeds
/// options.arena_cap positions, ErrorKind::InvalidParameter for bad k.
Solution solve(const GameSpec& spec, const SolverOptions& options = {});
/// The classical game: both sides move strong on an undirected graph.
Solution solve_undirected(const UndirectedGraph& g, int k,
                          const SolverOptions& options = {});

bool is_k_copwin(const GameSpec& spec, const SolverOptions& options = {});

/// Least k for which k cops win; k = n always suffices because the robber
/// is captured at placement when every vertex is covered.
int cop_number(const OrientedGraph& g, MoveModel model,
               const SolverOptions& options = {});
int cop_number(const UndirectedGraph& g, const SolverOptions& options = {});

struct Chain {
  int c_s, c_n, c_w;
};
/// Cop numbers of the three oriented models; always c_s <= c_n <= c_w.
Chain cop_number_chain(const OrientedGraph& g, const SolverOptions& options = {});

/// A winning cop strategy. Moves are chosen so that the stored rank is
/// minimal at every cop-turn position, ties broken by the lexicographically
/// least cop tuple. Covers every position reachable from the initial
/// placement when the cops follow it.
struct Strategy {
  MoveModel model = MoveModel::NormalCop;
  int k = 1;
  std::vector<std::string> vertex_names;
  std::vector<int> initial_cops;
  int start_rank = 0;

  struct Entry {
    std::vector<int> move;
    int rank = 0;
  };
  std::map<std::pair<std::vector<int>, int>, Entry> moves; // (cops, robber) ->

  const Entry* find(const std::vector<int>& cops, int robber) const;
  std::string to_json() const;
};

/// Throws ErrorKind::NoStrategy if the cops lose the game.
Strategy extract_strategy(const GameSpec& spec, const SolverOptions& options = {});

/// External robber control for play(). place sees the cops' placement;
/// move sees the position after the cops moved. Illegal proposals raise
/// ErrorKind::RuleViolation.
struct RobberPolicy {
  std::function<int(const OrientedGraph&, const std::vector<int>& cops)> place;
  std::function<int(const OrientedGraph&, const Configuration&)> move;
};

/// Robber that maximizes the solver rank of the next position.
RobberPolicy adversarial_robber(const Solution& solution);
/// Robber that maximizes its distance from the nearest cop (in cop moves).
RobberPolicy greedy_robber(const GameSpec& spec);

struct Transcript {
  std::vector<Configuration> configurations; // initial position, then one per move
  bool captured = false;
  int rounds = 0;
  std::string to_json_lines(const OrientedGraph& g) const;
};

/// Play the strategy against a robber policy; ends at capture. The strategy's
/// rank bound guarantees termination.
Transcript play(const GameSpec& spec, const Strategy& strategy,
                const RobberPolicy& robber);

} // namespace pursuit
