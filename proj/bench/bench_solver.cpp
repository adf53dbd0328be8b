// Times the serial reference solver against the OpenMP kernel on arenas big
// enough for the parallel path to matter, and checks the two engines return
// the same answer on every instance. Exits 1 on any disagreement.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pursuit/game.hpp"
#include "pursuit/generators.hpp"
#include "pursuit/subdivisions.hpp"

using namespace pursuit;

namespace {

struct BenchCase {
  std::string name;
  GameSpec spec;
};

struct Timed {
  Solution solution;
  double ms;
};

Timed timed_solve(const GameSpec& spec, Engine engine) {
  SolverOptions opts;
  opts.engine = engine;
  auto t0 = std::chrono::steady_clock::now();
  Solution s = solve(spec, opts);
  double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return {std::move(s), ms};
}

bool same_answer(const Solution& a, const Solution& b) {
  return a.cops_win() == b.cops_win() && a.position_count() == b.position_count() &&
         (!a.cops_win() ||
          (a.start_rank() == b.start_rank() && a.best_placement() == b.best_placement()));
}

} // namespace

int main() {
  auto tournament = [](int n, uint64_t seed) {
    return std::get<OrientedGraph>(generate({Family::Tournament, n, seed, 0.5, nullptr}));
  };
  auto tree = [](int n, uint64_t seed) {
    return std::get<UndirectedGraph>(generate({Family::RandomTree, n, seed, 0.5, nullptr}));
  };

  std::vector<BenchCase> cases;
  cases.push_back({"tournament-40 k=2 normal", {tournament(40, 7), 2, MoveModel::NormalCop}});
  cases.push_back({"tournament-24 k=3 normal", {tournament(24, 7), 3, MoveModel::NormalCop}});
  cases.push_back(
      {"S2(tree-24) k=2 strong", {strong_subdivide(tree(24, 3), 2).graph, 2, MoveModel::StrongCop}});
  cases.push_back(
      {"S3(cycle-12) k=3 weak",
       {strong_subdivide(std::get<UndirectedGraph>(generate({Family::Cycle, 12, 0, 0.5, nullptr})), 3)
            .graph,
        3, MoveModel::WeakCop}});

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-26s %12s %10s %10s %8s  %s\n", "instance", "positions", "serial", "parallel",
              "speedup", "answer");

  bool ok = true;
  for (const auto& c : cases) {
    auto serial = timed_solve(c.spec, Engine::Serial);
    auto parallel = timed_solve(c.spec, Engine::Parallel);
    bool agree = same_answer(serial.solution, parallel.solution);
    ok = ok && agree;
    std::string answer =
        serial.solution.cops_win()
            ? "cops in " + std::to_string(serial.solution.start_rank()) + " rounds"
            : "robber";
    std::printf("%-26s %12llu %8.0fms %8.0fms %7.2fx  %s%s\n", c.name.c_str(),
                static_cast<unsigned long long>(serial.solution.position_count()), serial.ms,
                parallel.ms, serial.ms / parallel.ms, answer.c_str(),
                agree ? "" : "  ENGINES DISAGREE");
  }
  return ok ? 0 : 1;
}
