#include "pursuit/game.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace pursuit {

namespace {

constexpr uint32_t kNoPly = std::numeric_limits<uint32_t>::max();

using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point end{};
  bool armed = false;
  explicit Deadline(double seconds) {
    if (seconds > 0) {
      armed = true;
      end = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(seconds));
    }
  }
  void check() const {
    if (armed && Clock::now() > end)
      fail(ErrorKind::ResourceLimit, "solver timeout exceeded");
  }
};

/// Colexicographic ranking of sorted k-multisets over {0..n-1}: a multiset
/// m maps to the strictly increasing tuple s_i = m_i + i, whose rank is
/// sum C(s_i, i+1). Ranks cover [0, C(n+k-1, k)) exactly.
struct Ranker {
  int n = 0, k = 0;
  uint64_t count = 0;
  std::vector<uint64_t> choose; // (n+k) rows, (k+1) columns

  void init(int n_, int k_, uint64_t arena_cap) {
    n = n_;
    k = k_;
    // count = C(n+k-1, k), computed stepwise with an overflow guard
    unsigned __int128 m = 1;
    for (int i = 1; i <= k; ++i) {
      m = m * (n + i - 1) / i;
      if (m > (unsigned __int128)1 << 62)
        fail(ErrorKind::ResourceLimit, "arena exceeds the configured cap");
    }
    count = static_cast<uint64_t>(m);
    unsigned __int128 positions = (unsigned __int128)count * n * 2;
    if (positions > arena_cap)
      fail(ErrorKind::ResourceLimit,
           "arena of " + std::to_string((uint64_t)positions) +
               " positions exceeds the cap of " + std::to_string(arena_cap));
    int rows = n + k;
    choose.assign(static_cast<size_t>(rows) * (k + 1), 0);
    for (int a = 0; a < rows; ++a) {
      C(a, 0) = 1;
      for (int b = 1; b <= std::min(a, k); ++b) {
        uint64_t x = C(a - 1, b - 1), y = (b <= a - 1) ? C(a - 1, b) : 0;
        uint64_t s = x + y;
        if (s < x) s = std::numeric_limits<uint64_t>::max(); // saturate
        C(a, b) = s;
      }
      if (a <= k) C(a, a) = 1;
    }
  }

  uint64_t& C(int a, int b) { return choose[static_cast<size_t>(a) * (k + 1) + b]; }
  uint64_t C(int a, int b) const {
    if (b > a) return 0;
    return choose[static_cast<size_t>(a) * (k + 1) + b];
  }

  uint64_t rank(const int* t) const {
    uint64_t r = 0;
    for (int i = 0; i < k; ++i) r += C(t[i] + i, i + 1);
    return r;
  }

  void unrank(uint64_t id, int* t) const {
    for (int i = k - 1; i >= 0; --i) {
      // largest s in [i, n-1+i] with C(s, i+1) <= id
      int lo = i, hi = n - 1 + i;
      while (lo < hi) {
        int mid = (lo + hi + 1) / 2;
        if (C(mid, i + 1) <= id)
          lo = mid;
        else
          hi = mid - 1;
      }
      t[i] = lo - i;
      id -= C(lo, i + 1);
    }
  }
};

bool tuple_contains(const std::vector<int>& sorted, int v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

/// Runs fn on every choice of one element per list (the joint cop moves).
template <typename Fn>
void for_each_joint(const std::vector<const std::vector<int>*>& lists, std::vector<int>& pick,
                    const Fn& fn) {
  int k = static_cast<int>(lists.size());
  std::vector<int> at(k, 0);
  while (true) {
    for (int i = 0; i < k; ++i) pick[i] = (*lists[i])[at[i]];
    fn();
    int i = k - 1;
    while (i >= 0 && at[i] + 1 == static_cast<int>(lists[i]->size())) at[i--] = 0;
    if (i < 0) return;
    ++at[i];
  }
}

} // namespace

// --- move sets ---

const char* to_string(MoveModel m) {
  switch (m) {
    case MoveModel::StrongCop: return "strong";
    case MoveModel::NormalCop: return "normal";
    case MoveModel::WeakCop: return "weak";
    case MoveModel::Undirected: return "undirected";
  }
  return "?";
}

MoveModel move_model_from_string(const std::string& s) {
  if (s == "strong") return MoveModel::StrongCop;
  if (s == "normal") return MoveModel::NormalCop;
  if (s == "weak") return MoveModel::WeakCop;
  if (s == "undirected") return MoveModel::Undirected;
  fail(ErrorKind::InvalidParameter, "unknown move model \"" + s + "\"");
}

std::vector<int> cop_move_set(const OrientedGraph& g, MoveModel m, int v) {
  switch (m) {
    case MoveModel::StrongCop:
    case MoveModel::Undirected: return g.closed_neighbors(v);
    case MoveModel::NormalCop:
    case MoveModel::WeakCop: return g.closed_out_neighbors(v);
  }
  fail(ErrorKind::Internal, "bad model");
}

std::vector<int> robber_move_set(const OrientedGraph& g, MoveModel m, int v) {
  switch (m) {
    case MoveModel::WeakCop:
    case MoveModel::Undirected: return g.closed_neighbors(v);
    case MoveModel::StrongCop:
    case MoveModel::NormalCop: return g.closed_out_neighbors(v);
  }
  fail(ErrorKind::Internal, "bad model");
}

// --- solved arena ---

struct Solution::Impl {
  int n = 0, k = 0;
  MoveModel model = MoveModel::NormalCop;
  std::vector<std::string> names;
  std::vector<std::vector<int>> cop_moves, rob_moves, inv_cop, inv_rob;
  Ranker ranker;
  bool capture_enabled = true;

  // indexed by multiset_rank * n + robber
  std::vector<uint8_t> cop_won, rob_won;
  std::vector<uint32_t> cop_ply, rob_ply;

  bool overall = false;
  std::vector<int> best;
  uint32_t best_worst_ply = 0;

  uint64_t idx(uint64_t ms, int r) const { return ms * n + r; }
  bool captured(const std::vector<int>& cops, int r) const {
    return capture_enabled && tuple_contains(cops, r);
  }
  int rounds_from_cop_ply(uint32_t ply) const { return static_cast<int>((ply + 1) / 2); }
};

namespace {

std::vector<std::vector<int>> invert(const std::vector<std::vector<int>>& fwd) {
  std::vector<std::vector<int>> inv(fwd.size());
  for (int u = 0; u < static_cast<int>(fwd.size()); ++u)
    for (int v : fwd[u]) inv[v].push_back(u);
  for (auto& l : inv) std::sort(l.begin(), l.end());
  return inv;
}

/// Backward induction from the captured positions, one ply layer at a time.
/// A cop-turn position is won as soon as one joint move reaches a won
/// robber-turn position; a robber-turn position is won once every robber
/// move leads to a won cop-turn position (tracked with countdowns).
void run_serial(Solution::Impl& a, const Deadline& deadline) {
  const int n = a.n, k = a.k;
  const uint64_t M = a.ranker.count;
  const uint64_t size = M * n;
  a.cop_won.assign(size, 0);
  a.rob_won.assign(size, 0);
  a.cop_ply.assign(size, kNoPly);
  a.rob_ply.assign(size, kNoPly);
  std::vector<uint32_t> countdown(size);
  for (uint64_t ms = 0; ms < M; ++ms)
    for (int r = 0; r < n; ++r)
      countdown[a.idx(ms, r)] = static_cast<uint32_t>(a.rob_moves[r].size());

  // frontier entries: position * 2 + (1 if robber-turn)
  std::vector<uint64_t> frontier, next;
  std::vector<int> tuple(k);
  if (a.capture_enabled) {
    for (uint64_t ms = 0; ms < M; ++ms) {
      a.ranker.unrank(ms, tuple.data());
      for (int i = 0; i < k; ++i) {
        int r = tuple[i];
        if (i > 0 && r == tuple[i - 1]) continue;
        uint64_t p = a.idx(ms, r);
        a.cop_won[p] = a.rob_won[p] = 1;
        a.cop_ply[p] = a.rob_ply[p] = 0;
        frontier.push_back(p * 2);
        frontier.push_back(p * 2 + 1);
      }
    }
  }

  std::vector<int> target(k), pred(k), sorted(k);
  std::vector<const std::vector<int>*> lists(k);
  for (uint32_t level = 0; !frontier.empty(); ++level) {
    deadline.check();
    next.clear();
    for (uint64_t item : frontier) {
      uint64_t pos = item / 2;
      uint64_t ms = pos / n;
      int r = static_cast<int>(pos % n);
      if (item & 1) {
        // robber-turn position won: every cop-turn predecessor wins by
        // moving here
        a.ranker.unrank(ms, target.data());
        for (int i = 0; i < k; ++i) lists[i] = &a.inv_cop[target[i]];
        for_each_joint(lists, pred, [&] {
          sorted = pred;
          std::sort(sorted.begin(), sorted.end());
          uint64_t p = a.idx(a.ranker.rank(sorted.data()), r);
          if (!a.cop_won[p]) {
            a.cop_won[p] = 1;
            a.cop_ply[p] = level + 1;
            next.push_back(p * 2);
          }
        });
      } else {
        // cop-turn position won: robber-turn predecessors lose one escape
        for (int r0 : a.inv_rob[r]) {
          uint64_t p = a.idx(ms, r0);
          if (a.rob_won[p]) continue;
          if (--countdown[p] == 0) {
            a.rob_won[p] = 1;
            a.rob_ply[p] = level + 1;
            next.push_back(p * 2 + 1);
          }
        }
      }
    }
    frontier.swap(next);
  }
}

/// Same induction, with each ply layer expanded in parallel. Marks use
/// atomic claims, so every position is pushed exactly once and the results
/// match the serial engine bit for bit.
void run_parallel(Solution::Impl& a, const Deadline& deadline) {
  const int n = a.n, k = a.k;
  const uint64_t M = a.ranker.count;
  const uint64_t size = M * n;
  a.cop_ply.assign(size, kNoPly);
  a.rob_ply.assign(size, kNoPly);
  std::unique_ptr<std::atomic<uint8_t>[]> cop_won(new std::atomic<uint8_t>[size]);
  std::unique_ptr<std::atomic<uint8_t>[]> rob_won(new std::atomic<uint8_t>[size]);
  std::unique_ptr<std::atomic<uint32_t>[]> countdown(new std::atomic<uint32_t>[size]);

#pragma omp parallel for schedule(static)
  for (int64_t p = 0; p < static_cast<int64_t>(size); ++p) {
    cop_won[p].store(0, std::memory_order_relaxed);
    rob_won[p].store(0, std::memory_order_relaxed);
    countdown[p].store(static_cast<uint32_t>(a.rob_moves[p % n].size()),
                       std::memory_order_relaxed);
  }

  std::vector<uint64_t> frontier, next;
  if (a.capture_enabled) {
#pragma omp parallel
    {
      std::vector<uint64_t> local;
      std::vector<int> tuple(k);
#pragma omp for schedule(static) nowait
      for (int64_t ms = 0; ms < static_cast<int64_t>(M); ++ms) {
        a.ranker.unrank(ms, tuple.data());
        for (int i = 0; i < k; ++i) {
          int r = tuple[i];
          if (i > 0 && r == tuple[i - 1]) continue;
          uint64_t p = a.idx(ms, r);
          cop_won[p].store(1, std::memory_order_relaxed);
          rob_won[p].store(1, std::memory_order_relaxed);
          a.cop_ply[p] = a.rob_ply[p] = 0;
          local.push_back(p * 2);
          local.push_back(p * 2 + 1);
        }
      }
#pragma omp critical
      frontier.insert(frontier.end(), local.begin(), local.end());
    }
  }

  for (uint32_t level = 0; !frontier.empty(); ++level) {
    deadline.check();
    next.clear();
#pragma omp parallel
    {
      std::vector<uint64_t> local;
      std::vector<int> target(k), pred(k), sorted(k);
      std::vector<const std::vector<int>*> lists(k);
#pragma omp for schedule(dynamic, 256) nowait
      for (int64_t fi = 0; fi < static_cast<int64_t>(frontier.size()); ++fi) {
        uint64_t item = frontier[fi];
        uint64_t pos = item / 2;
        uint64_t ms = pos / n;
        int r = static_cast<int>(pos % n);
        if (item & 1) {
          a.ranker.unrank(ms, target.data());
          for (int i = 0; i < k; ++i) lists[i] = &a.inv_cop[target[i]];
          for_each_joint(lists, pred, [&] {
            sorted = pred;
            std::sort(sorted.begin(), sorted.end());
            uint64_t p = a.idx(a.ranker.rank(sorted.data()), r);
            if (!cop_won[p].exchange(1, std::memory_order_relaxed)) {
              a.cop_ply[p] = level + 1;
              local.push_back(p * 2);
            }
          });
        } else {
          for (int r0 : a.inv_rob[r]) {
            uint64_t p = a.idx(ms, r0);
            if (rob_won[p].load(std::memory_order_relaxed)) continue;
            if (countdown[p].fetch_sub(1, std::memory_order_relaxed) == 1) {
              rob_won[p].store(1, std::memory_order_relaxed);
              a.rob_ply[p] = level + 1;
              local.push_back(p * 2 + 1);
            }
          }
        }
      }
#pragma omp critical
      next.insert(next.end(), local.begin(), local.end());
    }
    frontier.swap(next);
  }

  a.cop_won.assign(size, 0);
  a.rob_won.assign(size, 0);
#pragma omp parallel for schedule(static)
  for (int64_t p = 0; p < static_cast<int64_t>(size); ++p) {
    a.cop_won[p] = cop_won[p].load(std::memory_order_relaxed);
    a.rob_won[p] = rob_won[p].load(std::memory_order_relaxed);
  }
}

/// The cops win when some placement answers every robber placement; a robber
/// forced to place on a cop is captured on the spot.
void evaluate_placements(Solution::Impl& a) {
  const int n = a.n, k = a.k;
  const uint64_t M = a.ranker.count;
  a.overall = false;
  std::vector<int> tuple(k);
  for (uint64_t ms = 0; ms < M; ++ms) {
    a.ranker.unrank(ms, tuple.data());
    uint32_t worst = 0;
    bool wins = true;
    for (int r = 0; r < n && wins; ++r) {
      if (a.capture_enabled && tuple_contains(tuple, r)) continue;
      uint64_t p = a.idx(ms, r);
      if (!a.cop_won[p])
        wins = false;
      else
        worst = std::max(worst, a.cop_ply[p]);
    }
    if (!wins) continue;
    if (!a.overall || worst < a.best_worst_ply ||
        (worst == a.best_worst_ply && tuple < a.best)) {
      a.overall = true;
      a.best = tuple;
      a.best_worst_ply = worst;
    }
  }
}

std::shared_ptr<Solution::Impl> solve_prepared(std::shared_ptr<Solution::Impl> a,
                                               const SolverOptions& options) {
  a->inv_cop = invert(a->cop_moves);
  a->inv_rob = invert(a->rob_moves);
  a->capture_enabled = !options.disable_capture_detection;
  a->ranker.init(a->n, a->k, options.arena_cap);
  Deadline deadline(options.timeout_seconds);

  Engine engine = options.engine;
  if (engine == Engine::Auto) {
    bool parallel_pays = a->ranker.count * a->n * 2 >= 200'000;
#ifdef _OPENMP
    parallel_pays = parallel_pays && omp_get_max_threads() > 1;
#else
    parallel_pays = false;
#endif
    engine = parallel_pays ? Engine::Parallel : Engine::Serial;
  }
  if (engine == Engine::Parallel)
    run_parallel(*a, deadline);
  else
    run_serial(*a, deadline);
  evaluate_placements(*a);
  return a;
}

std::shared_ptr<Solution::Impl> make_impl(int n, std::vector<std::string> names,
                                          std::vector<std::vector<int>> cop_moves,
                                          std::vector<std::vector<int>> rob_moves,
                                          int k, MoveModel model) {
  if (n < 1) fail(ErrorKind::InvalidParameter, "the game needs at least one vertex");
  if (k < 1) fail(ErrorKind::InvalidParameter, "cop count must be at least 1");
  auto a = std::make_shared<Solution::Impl>();
  a->n = n;
  a->k = k;
  a->model = model;
  a->names = std::move(names);
  a->cop_moves = std::move(cop_moves);
  a->rob_moves = std::move(rob_moves);
  return a;
}

std::shared_ptr<Solution::Impl> impl_for(const GameSpec& spec) {
  const auto& g = spec.graph;
  int n = g.vertex_count();
  std::vector<std::vector<int>> cm(n), rm(n);
  for (int v = 0; v < n; ++v) {
    cm[v] = cop_move_set(g, spec.model, v);
    rm[v] = robber_move_set(g, spec.model, v);
  }
  return make_impl(n, g.names(), std::move(cm), std::move(rm), spec.k, spec.model);
}

} // namespace

Solution::Solution(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {
  n_ = impl_->n;
  k_ = impl_->k;
  overall_win_ = impl_->overall;
  best_placement_ = impl_->best;
  start_rank_ = impl_->rounds_from_cop_ply(impl_->best_worst_ply);
}

uint64_t Solution::position_count() const { return impl_->ranker.count * n_ * 2; }

namespace {
uint64_t checked_position(const Solution::Impl& a, const std::vector<int>& cops,
                          int robber, std::vector<int>& sorted) {
  if (static_cast<int>(cops.size()) != a.k)
    fail(ErrorKind::InvalidParameter, "expected " + std::to_string(a.k) + " cops");
  for (int c : cops)
    if (c < 0 || c >= a.n) fail(ErrorKind::InvalidVertex, "cop vertex out of range");
  if (robber < 0 || robber >= a.n)
    fail(ErrorKind::InvalidVertex, "robber vertex out of range");
  sorted = cops;
  std::sort(sorted.begin(), sorted.end());
  return a.idx(a.ranker.rank(sorted.data()), robber);
}
} // namespace

bool Solution::cop_turn_won(const std::vector<int>& cops, int robber) const {
  std::vector<int> s;
  return impl_->cop_won[checked_position(*impl_, cops, robber, s)] != 0;
}

bool Solution::robber_turn_won(const std::vector<int>& cops, int robber) const {
  std::vector<int> s;
  return impl_->rob_won[checked_position(*impl_, cops, robber, s)] != 0;
}

int Solution::rank(const std::vector<int>& cops, int robber) const {
  std::vector<int> s;
  uint64_t p = checked_position(*impl_, cops, robber, s);
  if (!impl_->cop_won[p]) return -1;
  return impl_->rounds_from_cop_ply(impl_->cop_ply[p]);
}

const std::vector<int>& Solution::best_placement() const {
  if (!overall_win_) fail(ErrorKind::NoStrategy, "the cops lose this game");
  return best_placement_;
}

Solution solve(const GameSpec& spec, const SolverOptions& options) {
  return Solution(solve_prepared(impl_for(spec), options));
}

Solution solve_undirected(const UndirectedGraph& g, int k, const SolverOptions& options) {
  int n = g.vertex_count();
  std::vector<std::vector<int>> moves(n);
  for (int v = 0; v < n; ++v) moves[v] = g.closed_neighbors(v);
  return Solution(solve_prepared(
      make_impl(n, g.names(), moves, moves, k, MoveModel::Undirected), options));
}

bool is_k_copwin(const GameSpec& spec, const SolverOptions& options) {
  // Covering every vertex captures the robber at placement.
  if (spec.k >= spec.graph.vertex_count() && !options.disable_capture_detection)
    return true;
  return solve(spec, options).cops_win();
}

namespace {
template <typename TryK>
int least_winning_k(int n, const TryK& wins) {
  for (int k = 1; k <= n; ++k)
    if (wins(k)) return k;
  fail(ErrorKind::Internal,
       "no cop count up to the vertex count wins; the capture test is broken");
}
} // namespace

int cop_number(const OrientedGraph& g, MoveModel model, const SolverOptions& options) {
  return least_winning_k(g.vertex_count(), [&](int k) {
    return is_k_copwin({g, k, model}, options);
  });
}

int cop_number(const UndirectedGraph& g, const SolverOptions& options) {
  return least_winning_k(g.vertex_count(), [&](int k) {
    if (k >= g.vertex_count() && !options.disable_capture_detection) return true;
    return solve_undirected(g, k, options).cops_win();
  });
}

Chain cop_number_chain(const OrientedGraph& g, const SolverOptions& options) {
  Chain c{cop_number(g, MoveModel::StrongCop, options),
          cop_number(g, MoveModel::NormalCop, options),
          cop_number(g, MoveModel::WeakCop, options)};
  if (!(c.c_s <= c.c_n && c.c_n <= c.c_w))
    fail(ErrorKind::Internal, "cop number chain is out of order");
  return c;
}

// --- strategy extraction and play ---

const Strategy::Entry* Strategy::find(const std::vector<int>& cops, int robber) const {
  std::vector<int> s = cops;
  std::sort(s.begin(), s.end());
  auto it = moves.find({s, robber});
  return it == moves.end() ? nullptr : &it->second;
}

std::string Strategy::to_json() const {
  nlohmann::ordered_json j;
  j["model"] = to_string(model);
  j["k"] = k;
  auto names_of = [&](const std::vector<int>& vs) {
    nlohmann::ordered_json a = nlohmann::ordered_json::array();
    for (int v : vs) a.push_back(vertex_names[v]);
    return a;
  };
  j["initial_cops"] = names_of(initial_cops);
  j["start_rank"] = start_rank;
  nlohmann::ordered_json ms = nlohmann::ordered_json::array();
  for (const auto& [key, entry] : moves) {
    nlohmann::ordered_json m;
    m["cops"] = names_of(key.first);
    m["robber"] = vertex_names[key.second];
    m["rank"] = entry.rank;
    m["move"] = names_of(entry.move);
    ms.push_back(std::move(m));
  }
  j["moves"] = std::move(ms);
  return j.dump();
}

Strategy extract_strategy(const GameSpec& spec, const SolverOptions& options) {
  Solution sol = solve(spec, options);
  const auto& a = sol.impl();
  if (!sol.cops_win())
    fail(ErrorKind::NoStrategy, "the cops lose this game; no strategy exists");

  Strategy st;
  st.model = spec.model;
  st.k = spec.k;
  st.vertex_names = a.names;
  st.initial_cops = sol.best_placement();
  st.start_rank = sol.start_rank();

  std::vector<std::pair<std::vector<int>, int>> queue;
  auto enqueue = [&](const std::vector<int>& cops, int r) {
    if (st.moves.emplace(std::make_pair(cops, r), Strategy::Entry{}).second)
      queue.push_back({cops, r});
  };
  for (int r = 0; r < a.n; ++r)
    if (!tuple_contains(st.initial_cops, r)) enqueue(st.initial_cops, r);

  std::vector<int> pick(a.k), sorted(a.k);
  std::vector<const std::vector<int>*> lists(a.k);
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    auto [cops, r] = queue[qi];
    uint64_t here = a.idx(a.ranker.rank(cops.data()), r);
    // best joint move: least ply the robber-turn successor can force,
    // ties by least tuple
    uint32_t best_ply = kNoPly;
    std::vector<int> best_move;
    for (int i = 0; i < a.k; ++i) lists[i] = &a.cop_moves[cops[i]];
    for_each_joint(lists, pick, [&] {
      sorted = pick;
      std::sort(sorted.begin(), sorted.end());
      uint64_t p = a.idx(a.ranker.rank(sorted.data()), r);
      if (!a.rob_won[p]) return;
      uint32_t ply = a.rob_ply[p];
      if (ply < best_ply || (ply == best_ply && sorted < best_move)) {
        best_ply = ply;
        best_move = sorted;
      }
    });
    if (best_ply == kNoPly || best_ply + 1 != a.cop_ply[here])
      fail(ErrorKind::Internal, "strategy extraction disagrees with the solved ranks");
    auto& entry = st.moves[{cops, r}];
    entry.move = best_move;
    entry.rank = a.rounds_from_cop_ply(a.cop_ply[here]);
    if (tuple_contains(best_move, r)) continue; // capture, no successors
    for (int r2 : a.rob_moves[r])
      if (!tuple_contains(best_move, r2)) enqueue(best_move, r2);
  }
  return st;
}

RobberPolicy adversarial_robber(const Solution& solution) {
  // Shares the solved arena: picks successors of maximal rank, preferring
  // positions the cops cannot win at all.
  auto sol = std::make_shared<Solution>(solution);
  auto value = [sol](const std::vector<int>& cops, int r) -> uint64_t {
    const auto& a = sol->impl();
    std::vector<int> s = cops;
    std::sort(s.begin(), s.end());
    if (a.captured(s, r)) return 0;
    uint64_t p = a.idx(a.ranker.rank(s.data()), r);
    return a.cop_won[p] ? a.cop_ply[p] : std::numeric_limits<uint64_t>::max();
  };
  RobberPolicy policy;
  policy.place = [value, sol](const OrientedGraph&, const std::vector<int>& cops) {
    int best = 0;
    uint64_t best_value = 0;
    bool first = true;
    for (int r = 0; r < sol->vertex_count(); ++r) {
      uint64_t v = value(cops, r);
      if (first || v > best_value) {
        first = false;
        best = r;
        best_value = v;
      }
    }
    return best;
  };
  policy.move = [value, sol](const OrientedGraph&, const Configuration& c) {
    const auto& a = sol->impl();
    int best = -1;
    uint64_t best_value = 0;
    for (int r : a.rob_moves[c.robber]) {
      uint64_t v = value(c.cops, r);
      if (best < 0 || v > best_value) {
        best = r;
        best_value = v;
      }
    }
    return best;
  };
  return policy;
}

RobberPolicy greedy_robber(const GameSpec& spec) {
  // Maximizes the distance the cops still have to walk, measured in the
  // cops' own move graph; ties go to the smallest vertex id.
  auto graph = std::make_shared<OrientedGraph>(spec.graph);
  MoveModel model = spec.model;
  auto cop_distances = [graph, model](const std::vector<int>& cops) {
    int n = graph->vertex_count();
    std::vector<int> dist(n, std::numeric_limits<int>::max());
    std::vector<int> queue;
    for (int c : cops)
      if (dist[c] != 0) {
        dist[c] = 0;
        queue.push_back(c);
      }
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      for (int w : cop_move_set(*graph, model, v))
        if (dist[w] > dist[v] + 1) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
    }
    return dist;
  };
  RobberPolicy policy;
  policy.place = [cop_distances, graph](const OrientedGraph&, const std::vector<int>& cops) {
    auto dist = cop_distances(cops);
    int best = 0;
    for (int r = 1; r < graph->vertex_count(); ++r)
      if (dist[r] > dist[best]) best = r;
    return best;
  };
  policy.move = [cop_distances, graph, model](const OrientedGraph&, const Configuration& c) {
    auto dist = cop_distances(c.cops);
    int best = -1;
    for (int r : robber_move_set(*graph, model, c.robber))
      if (best < 0 || dist[r] > dist[best]) best = r;
    return best;
  };
  return policy;
}

std::string Transcript::to_json_lines(const OrientedGraph& g) const {
  std::string out;
  for (const auto& c : configurations) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json cops = nlohmann::ordered_json::array();
    for (int v : c.cops) cops.push_back(g.name(v));
    j["cops"] = std::move(cops);
    j["robber"] = g.name(c.robber);
    j["turn"] = c.cop_turn ? "cop" : "robber";
    out += j.dump();
    out += '\n';
  }
  nlohmann::ordered_json tail;
  tail["captured"] = captured;
  tail["rounds"] = rounds;
  out += tail.dump();
  out += '\n';
  return out;
}

Transcript play(const GameSpec& spec, const Strategy& strategy, const RobberPolicy& robber) {
  const auto& g = spec.graph;
  int n = g.vertex_count();
  if (strategy.k != spec.k || strategy.model != spec.model ||
      strategy.vertex_names != g.names())
    fail(ErrorKind::InvalidParameter, "strategy belongs to a different game");
  if (!robber.place || !robber.move)
    fail(ErrorKind::InvalidParameter, "robber policy is incomplete");

  Transcript t;
  std::vector<int> cops = strategy.initial_cops;
  int r = robber.place(g, cops);
  if (r < 0 || r >= n)
    fail(ErrorKind::RuleViolation, "robber placed outside the graph");
  t.configurations.push_back({cops, r, true});
  if (tuple_contains(cops, r)) { // placed onto a cop
    t.captured = true;
    return t;
  }
  while (true) {
    const auto* entry = strategy.find(cops, r);
    if (!entry)
      fail(ErrorKind::Internal, "strategy has no move for a reachable position");
    cops = entry->move;
    ++t.rounds;
    t.configurations.push_back({cops, r, false});
    if (tuple_contains(cops, r)) {
      t.captured = true;
      return t;
    }
    int r2 = robber.move(g, {cops, r, false});
    auto legal = robber_move_set(g, spec.model, r);
    if (!std::binary_search(legal.begin(), legal.end(), r2))
      fail(ErrorKind::RuleViolation,
           "robber move " + (r2 >= 0 && r2 < n ? g.name(r2) : std::to_string(r2)) +
               " is not legal from " + g.name(r));
    r = r2;
    t.configurations.push_back({cops, r, true});
    if (tuple_contains(cops, r)) {
      t.captured = true;
      return t;
    }
    if (t.rounds > strategy.start_rank + 1)
      fail(ErrorKind::Internal, "strategy failed to make progress");
  }
}

} // namespace pursuit
