#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <vector>

#include <json.hpp>

#include "pursuit/error.hpp"
#include "pursuit/generators.hpp"
#include "pursuit/graph.hpp"
#include "pursuit/graph_io.hpp"

using namespace pursuit;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Internal;
}

GeneratorSpec spec(Family f, int n, uint64_t seed = 0, double p = 0.5) {
  return {f, n, seed, p, nullptr};
}

uint64_t choose(int n, int k) {
  if (k < 0 || k > n) return 0;
  uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

uint64_t upow(uint64_t b, int e) {
  uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

} // namespace

TEST_CASE("splitmix64 matches its published stream") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xe220a8397b1dcdafull);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ull);
  CHECK(rng.next() == 0x06c45d188009454full);

  SplitMix64 u(42);
  CHECK(u.unit() == doctest::Approx(0.7415648787718233).epsilon(1e-15));
  for (int i = 0; i < 64; ++i) {
    auto b = u.below(10);
    CHECK(b < 10);
  }
}

TEST_CASE("family names round-trip") {
  for (Family f : {Family::Path, Family::Cycle, Family::Complete, Family::Star,
                   Family::RandomTree, Family::RandomGraph, Family::RandomBipartite,
                   Family::Tournament, Family::RandomOrientation})
    CHECK(family_from_string(to_string(f)) == f);
  CHECK(kind_of([] { family_from_string("hypercube"); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("deterministic family shapes") {
  auto path = std::get<UndirectedGraph>(generate(spec(Family::Path, 4)));
  CHECK(path.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});

  auto cycle = std::get<UndirectedGraph>(generate(spec(Family::Cycle, 4)));
  CHECK(cycle.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

  auto complete = std::get<UndirectedGraph>(generate(spec(Family::Complete, 4)));
  CHECK(complete.edge_count() == 6);

  auto star = std::get<UndirectedGraph>(generate(spec(Family::Star, 5)));
  CHECK(star.edge_count() == 4);
  CHECK(star.degree(0) == 4);
}

TEST_CASE("tournaments orient every pair exactly once") {
  auto t = std::get<OrientedGraph>(generate(spec(Family::Tournament, 5, 7)));
  CHECK(t.arc_count() == 10);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) CHECK(t.has_arc(i, j) != t.has_arc(j, i));

  auto again = std::get<OrientedGraph>(generate(spec(Family::Tournament, 5, 7)));
  CHECK(t.arcs() == again.arcs());
  auto other = std::get<OrientedGraph>(generate(spec(Family::Tournament, 5, 8)));
  CHECK(t.arcs() != other.arcs());
}

TEST_CASE("random trees are trees for every seed tried") {
  for (int n = 2; n <= 9; ++n)
    for (uint64_t seed = 0; seed < 5; ++seed) {
      auto g = std::get<UndirectedGraph>(generate(spec(Family::RandomTree, n, seed)));
      CHECK(is_tree(g));
      CHECK(g.vertex_count() == n);
    }
}

TEST_CASE("edge probability extremes") {
  auto empty = std::get<UndirectedGraph>(generate(spec(Family::RandomGraph, 6, 3, 0.0)));
  CHECK(empty.edge_count() == 0);
  auto full = std::get<UndirectedGraph>(generate(spec(Family::RandomGraph, 6, 3, 1.0)));
  CHECK(full.edge_count() == 15);

  auto bi = std::get<UndirectedGraph>(generate(spec(Family::RandomBipartite, 7, 3, 1.0)));
  CHECK(bi.edge_count() == 4 * 3); // parts of sizes ceil(7/2) and floor(7/2)
  CHECK(is_bipartite(bi));
  CHECK(is_triangle_free(bi));
  auto sparse = std::get<UndirectedGraph>(generate(spec(Family::RandomBipartite, 8, 11, 0.4)));
  CHECK(is_bipartite(sparse));
  CHECK(is_triangle_free(sparse));
}

TEST_CASE("random orientations preserve the underlying graph") {
  GeneratorSpec s = spec(Family::RandomOrientation, 6, 9);
  s.of = std::make_shared<GeneratorSpec>(spec(Family::RandomGraph, 6, 4, 0.6));
  auto oriented = std::get<OrientedGraph>(generate(s));
  auto inner = std::get<UndirectedGraph>(generate(*s.of));
  CHECK(oriented.underlying().edges() == inner.edges());

  auto repeat = std::get<OrientedGraph>(generate(s));
  CHECK(oriented.arcs() == repeat.arcs());
}

TEST_CASE("invalid generator parameters") {
  CHECK(kind_of([] { generate(spec(Family::Path, 1)); }) == ErrorKind::InvalidParameter);
  CHECK(kind_of([] { generate(spec(Family::Cycle, 2)); }) == ErrorKind::InvalidParameter);
  CHECK(kind_of([] { generate(spec(Family::RandomGraph, 4, 0, 1.5)); }) ==
        ErrorKind::InvalidParameter);
  CHECK(kind_of([] { generate(spec(Family::RandomOrientation, 4)); }) ==
        ErrorKind::InvalidParameter);

  GeneratorSpec wrapped_tournament = spec(Family::RandomOrientation, 4);
  wrapped_tournament.of = std::make_shared<GeneratorSpec>(spec(Family::Tournament, 4));
  CHECK(kind_of([&] { generate(wrapped_tournament); }) == ErrorKind::InvalidParameter);

  GeneratorSpec mismatch = spec(Family::RandomOrientation, 4);
  mismatch.of = std::make_shared<GeneratorSpec>(spec(Family::Path, 5));
  CHECK(kind_of([&] { generate(mismatch); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("specs round-trip through JSON") {
  GeneratorSpec s = spec(Family::RandomOrientation, 6, 11);
  s.of = std::make_shared<GeneratorSpec>(spec(Family::RandomBipartite, 6, 2, 0.25));
  auto j = spec_json(s);
  CHECK(j["family"] == "random-orientation");
  CHECK(j["of"]["p"] == 0.25);
  CHECK_FALSE(j.contains("p")); // p is only meaningful for the edge-drawing families

  auto back = spec_from_json(j);
  CHECK(spec_json(back) == j);
  CHECK(io::to_canonical_json(generate(back)) == io::to_canonical_json(generate(s)));

  CHECK(kind_of([] { spec_from_json(nlohmann::json{{"n", 3}}); }) == ErrorKind::Parse);
}

TEST_CASE("exact counts of connected graphs") {
  // labeled connected graphs: complement counting over the first vertex's
  // component, so the enumerators are checked against independent arithmetic
  std::vector<uint64_t> undirected(8, 0), oriented(6, 0);
  undirected[1] = 1;
  for (int n = 2; n <= 7; ++n) {
    uint64_t all = upow(2, n * (n - 1) / 2), rest = 0;
    for (int k = 1; k < n; ++k)
      rest += choose(n - 1, k - 1) * undirected[k] * upow(2, (n - k) * (n - k - 1) / 2);
    undirected[n] = all - rest;
  }
  oriented[1] = 1;
  for (int n = 2; n <= 5; ++n) {
    uint64_t all = upow(3, n * (n - 1) / 2), rest = 0;
    for (int k = 1; k < n; ++k)
      rest += choose(n - 1, k - 1) * oriented[k] * upow(3, (n - k) * (n - k - 1) / 2);
    oriented[n] = all - rest;
  }
  CHECK(undirected[4] == 38);
  CHECK(undirected[6] == 26704);
  CHECK(undirected[7] == 1866256);
  CHECK(oriented[3] == 20);
  CHECK(oriented[4] == 624);
  CHECK(oriented[5] == 55248);

  for (int n = 1; n <= 6; ++n) CHECK(count_connected_undirected(n) == undirected[n]);
  for (int n = 1; n <= 5; ++n) CHECK(count_connected_oriented(n) == oriented[n]);
}

TEST_CASE("enumeration order is the code order") {
  std::vector<std::string> first;
  enumerate_connected_undirected(3, [&](const UndirectedGraph& g) {
    if (first.size() < 2) first.push_back(io::to_canonical_json(g));
  });
  // smallest connected codes: {01,02} then {01,12}
  CHECK(first[0] == io::to_canonical_json(UndirectedGraph::from_edges(3, {{0, 1}, {0, 2}})));
  CHECK(first[1] == io::to_canonical_json(UndirectedGraph::from_edges(3, {{0, 1}, {1, 2}})));

  bool seen = false;
  enumerate_connected_oriented(2, [&](const OrientedGraph& g) {
    if (!seen) CHECK(g.arcs() == std::vector<Arc>{{0, 1}});
    seen = true;
  });
  CHECK(seen);
}

TEST_CASE("enumeration caps raise resource errors") {
  auto swallow_u = [](const UndirectedGraph&) {};
  auto swallow_o = [](const OrientedGraph&) {};
  CHECK(kind_of([&] { enumerate_connected_undirected(8, swallow_u); }) ==
        ErrorKind::ResourceLimit);
  CHECK(kind_of([&] { enumerate_connected_oriented(6, swallow_o); }) ==
        ErrorKind::ResourceLimit);
}
