#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "pursuit/error.hpp"
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

} // namespace

TEST_CASE("canonical JSON round-trips byte for byte") {
  OrientedGraph g({"b", "a"}, {{1, 0}});
  auto text = io::to_canonical_json(g);
  auto back = io::parse_graph_json(text);
  CHECK(io::to_canonical_json(back) == text);
  CHECK(std::get<OrientedGraph>(back) == g);
  CHECK(text.find("\"directed\":true") != std::string::npos);

  UndirectedGraph u({"x", "y z"}, {{0, 1}});
  auto utext = io::to_canonical_json(u);
  CHECK(std::get<UndirectedGraph>(io::parse_graph_json(utext)) == u);
}

TEST_CASE("arcs are emitted sorted regardless of input order") {
  auto g = OrientedGraph::from_arcs(3, {{2, 0}, {0, 1}});
  auto j = io::graph_to_json(g);
  CHECK(j["arcs"][0][0] == "0");
  CHECK(j["arcs"][0][1] == "1");
  CHECK(j["arcs"][1][0] == "2");
  CHECK(j["arcs"][1][1] == "0");
}

TEST_CASE("parse errors name the offender") {
  auto parse = [](const char* text) { return [text] { io::parse_graph_json(text); }; };
  CHECK(kind_of(parse("{")) == ErrorKind::Parse);
  CHECK(kind_of(parse("[]")) == ErrorKind::Parse);
  CHECK(kind_of(parse(R"({"vertices":["a"],"arcs":[]})")) == ErrorKind::Parse);

  try {
    io::parse_graph_json(R"({"directed":true,"vertices":["a","a"],"arcs":[]})");
    FAIL("expected duplicate-vertex error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("\"a\"") != std::string::npos);
  }
  try {
    io::parse_graph_json(R"({"directed":true,"vertices":["a","b"],"arcs":[["a","zz"]]})");
    FAIL("expected unknown-vertex error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("\"zz\"") != std::string::npos);
  }
  CHECK(kind_of(parse(R"({"directed":true,"vertices":["a","b"],"arcs":[["a","a"]]})")) ==
        ErrorKind::GraphLoop);
  CHECK(kind_of(parse(
            R"({"directed":true,"vertices":["a","b"],"arcs":[["a","b"],["b","a"]]})")) ==
        ErrorKind::GraphAntiparallel);
}

TEST_CASE("edge lists parse with comments and name interning") {
  auto g = io::parse_edge_list("# demo\nu v\nv w # tail\n\nu w\n", true);
  const auto& o = std::get<OrientedGraph>(g);
  CHECK(o.vertex_count() == 3);
  CHECK(o.name(0) == "u");
  CHECK(o.name(1) == "v");
  CHECK(o.arc_count() == 3);

  auto u = io::parse_edge_list("0 1\n1 2\n", false);
  CHECK(std::get<UndirectedGraph>(u).edge_count() == 2);

  CHECK(kind_of([] { io::parse_edge_list("a\n", true); }) == ErrorKind::Parse);
  CHECK(kind_of([] { io::parse_edge_list("a b c\n", true); }) == ErrorKind::Parse);
}

TEST_CASE("dot export") {
  OrientedGraph g({"a", "b c"}, {{0, 1}});
  auto dot = io::to_dot(g);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("\"a\" -> \"b c\"") != std::string::npos);
  UndirectedGraph u({"x", "y"}, {{0, 1}});
  auto ud = io::to_dot(u);
  CHECK(ud.find("graph") != std::string::npos);
  CHECK(ud.find("\"x\" -- \"y\"") != std::string::npos);
}

TEST_CASE("sha256 known vectors") {
  CHECK(io::sha256_hex("") ==
        "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  CHECK(io::sha256_hex("abc") ==
        "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST_CASE("variant helpers") {
  io::GraphVariant g = OrientedGraph::from_arcs(2, {{0, 1}});
  CHECK(io::is_directed(g));
  CHECK(io::expect_oriented(g, "test").arc_count() == 1);
  CHECK(kind_of([&] { io::expect_undirected(g, "test"); }) == ErrorKind::InvalidParameter);
}
