#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include <json.hpp>

#include "pursuit/error.hpp"
#include "pursuit/generators.hpp"
#include "pursuit/graph.hpp"
#include "pursuit/subdivisions.hpp"

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

OrientedGraph dir_c3() { return OrientedGraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}}); }
OrientedGraph transitive_triangle() {
  return OrientedGraph::from_arcs(3, {{0, 1}, {0, 2}, {1, 2}});
}
UndirectedGraph undirected(Family f, int n) {
  return std::get<UndirectedGraph>(generate({f, n, 0, 0.5, nullptr}));
}
UndirectedGraph paw() {
  return UndirectedGraph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
}

} // namespace

TEST_CASE("strongly subdividing a single edge gives the directed four-cycle") {
  auto r = strong_subdivide(undirected(Family::Path, 2), 2);
  CHECK(r.graph.names() == std::vector<std::string>{"0", "1", "1^0_1", "0^1_1"});
  CHECK(r.graph.arcs() == std::vector<Arc>{{0, 2}, {1, 3}, {2, 1}, {3, 0}});
  CHECK(r.projection == std::vector<int>{0, 1, 1, 0});
  CHECK(r.t == 2);
  CHECK(r.kind == SubdivisionKind::Strong);
}

TEST_CASE("subdivision sizes match the closed forms") {
  for (auto g : {undirected(Family::Path, 3), undirected(Family::Complete, 3),
                 undirected(Family::Cycle, 4), paw(), undirected(Family::Star, 5)}) {
    int n = g.vertex_count(), m = g.edge_count();
    for (int t = 2; t <= 4; ++t) {
      auto r = strong_subdivide(g, t);
      CHECK(r.graph.vertex_count() == n + 2 * (t - 1) * m);
      CHECK(r.graph.arc_count() == 2 * t * m);
      CHECK(static_cast<int>(r.projection.size()) == r.graph.vertex_count());
      CHECK(static_cast<int>(r.roles.size()) == r.graph.vertex_count());
    }
  }
  for (auto g : {dir_c3(), transitive_triangle()}) {
    int n = g.vertex_count(), m = g.arc_count();
    for (int t = 1; t <= 4; ++t) {
      auto r = weak_subdivide(g, t);
      CHECK(r.graph.vertex_count() == n + (t - 1) * m);
      CHECK(r.graph.arc_count() == t * m);
    }
  }
}

TEST_CASE("out-of-range subdivision lengths are rejected") {
  CHECK(kind_of([] { strong_subdivide(undirected(Family::Path, 2), 1); }) ==
        ErrorKind::InvalidParameter);
  CHECK(kind_of([] { strong_subdivide(undirected(Family::Path, 2), 0); }) ==
        ErrorKind::InvalidParameter);
  CHECK(kind_of([] { weak_subdivide(dir_c3(), 0); }) == ErrorKind::InvalidParameter);
}

TEST_CASE("weak subdivision with t = 1 copies the graph") {
  auto g = transitive_triangle();
  auto r = weak_subdivide(g, 1);
  CHECK(r.graph.names() == g.names());
  CHECK(r.graph.arcs() == g.arcs());
  CHECK(r.projection == std::vector<int>{0, 1, 2});
  for (const auto& role : r.roles) CHECK(role.original);
}

TEST_CASE("weakly subdividing the directed triangle doubles it into a six-cycle") {
  auto r = weak_subdivide(dir_c3(), 2);
  CHECK(r.graph.vertex_count() == 6);
  CHECK(r.graph.arc_count() == 6);
  for (int v = 0; v < 6; ++v) {
    CHECK(r.graph.out_degree(v) == 1);
    CHECK(r.graph.in_degree(v) == 1);
  }
  CHECK(is_strongly_connected(r.graph));
}

TEST_CASE("strong subdivisions are strongly connected exactly when the input is connected") {
  CHECK(is_strongly_connected(strong_subdivide(paw(), 2).graph));
  CHECK(is_strongly_connected(strong_subdivide(undirected(Family::Star, 6), 3).graph));
  auto two_edges = UndirectedGraph::from_edges(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_strongly_connected(strong_subdivide(two_edges, 2).graph));
}

TEST_CASE("twice-subdivided graphs are bipartite and 2-degenerate") {
  for (int n = 2; n <= 5; ++n)
    enumerate_connected_undirected(n, [&](const UndirectedGraph& g) {
      auto u = strong_subdivide(g, 2).graph.underlying();
      CHECK(is_bipartite(u));
      CHECK(degeneracy(u) <= 2);
    });
}

TEST_CASE("projection and roles agree with the vertex names") {
  auto g = paw();
  auto r = strong_subdivide(g, 3);
  for (int v = 0; v < r.graph.vertex_count(); ++v) {
    const auto& role = r.roles[v];
    if (role.original) {
      CHECK(v < g.vertex_count());
      CHECK(r.projection[v] == v);
      CHECK(r.graph.name(v) == g.name(v));
    } else {
      CHECK(r.projection[v] == role.owner);
      CHECK(role.index >= 1);
      CHECK(role.index <= r.t - 1);
      CHECK(r.graph.name(v) == g.name(role.owner) + "^" + g.name(role.counterpart) + "_" +
                                   std::to_string(role.index));
      CHECK(g.has_edge(role.owner, role.counterpart));
    }
  }
}

TEST_CASE("the projection observation holds for every constructed subdivision") {
  for (int t = 2; t <= 4; ++t)
    CHECK(check_projection_observation(strong_subdivide(paw(), t), SubdivisionKind::Strong));
  for (int t = 1; t <= 4; ++t)
    CHECK(check_projection_observation(weak_subdivide(transitive_triangle(), t),
                                       SubdivisionKind::Weak));
  for (int n = 2; n <= 4; ++n)
    enumerate_connected_undirected(n, [&](const UndirectedGraph& g) {
      CHECK(check_projection_observation(strong_subdivide(g, 2), SubdivisionKind::Strong));
    });
}

TEST_CASE("the projection check flags kind mismatches and tampered projections") {
  auto r = strong_subdivide(undirected(Family::Path, 3), 2);
  CHECK(kind_of([&] { check_projection_observation(r, SubdivisionKind::Weak); }) ==
        ErrorKind::InvalidParameter);

  // claim an interior of the path into 1 projects to the far endpoint
  auto tampered = r;
  REQUIRE(tampered.graph.name(3) == "1^0_1");
  tampered.projection[3] = 2;
  CHECK_FALSE(check_projection_observation(tampered, SubdivisionKind::Strong));
}

TEST_CASE("subdivision serialization") {
  auto r = weak_subdivide(OrientedGraph::from_arcs(2, {{0, 1}}), 2);
  auto j = subdivision_json(r);
  CHECK(j["kind"] == "weak");
  CHECK(j["t"] == 2);
  CHECK(j["graph"]["directed"] == true);
  CHECK(j["graph"]["vertices"] == nlohmann::json::array({"0", "1", "1^0_1"}));
  CHECK(j["projection"]["1^0_1"] == "1");
  CHECK(j["projection"]["0"] == "0");
  REQUIRE(j["roles"].size() == 3);
  CHECK(j["roles"][0]["role"] == "original");
  CHECK(j["roles"][2]["role"] == "new");
  CHECK(j["roles"][2]["owner"] == "1");
  CHECK(j["roles"][2]["counterpart"] == "0");
  CHECK(j["roles"][2]["index"] == 1);
}

TEST_CASE("inputs whose names collide with interior names are rejected") {
  UndirectedGraph g({"0", "1", "1^0_1"}, {{0, 1}, {1, 2}});
  CHECK(kind_of([&] { strong_subdivide(g, 2); }) == ErrorKind::GraphInvalid);
}
