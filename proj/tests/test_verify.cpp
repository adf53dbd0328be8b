#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <functional>

#include <json.hpp>

#include "pursuit/error.hpp"
#include "pursuit/retracts.hpp"
#include "pursuit/verify.hpp"

using namespace pursuit;
using nlohmann::json;

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

Corpus small_corpus() {
  Corpus c;
  c.exhaustive_oriented_max = 3;
  c.exhaustive_undirected_max = 4;
  c.named.push_back(
      {"k3", std::get<UndirectedGraph>(generate({Family::Complete, 3, 0, 0.5, nullptr}))});
  c.named.push_back({"directed-c3", OrientedGraph::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}})});
  return c;
}

const std::vector<std::string> kCheckOrder = {
    "cop-number-chain",
    "strong-retract-invariance",
    "distributed-retract-invariance",
    "weak-retract-copwin-invariance",
    "not-copwin-condition",
    "strong-subdivision-bounds",
    "weak-cop-subdivision-bound",
    "triangle-free-equality",
    "tree-characterization",
    "copwin-triangle",
    "weak-subdivision-monotonicity",
    "projection-observations",
    "subdivision-structure",
};

} // namespace

TEST_CASE("the built-in corpus has the advertised shape") {
  auto c = default_corpus();
  CHECK(c.named.size() == 23);
  CHECK(c.witness_pool.size() == 50);
  CHECK(c.exhaustive_undirected_max == 6);
  CHECK(c.exhaustive_oriented_max == 4);
  CHECK_FALSE(c.empty());

  std::set<std::string> names;
  for (const auto& e : c.named) CHECK(names.insert(e.name).second);
  for (const auto& e : c.witness_pool) {
    CHECK(names.insert(e.name).second);
    const auto& g = std::get<OrientedGraph>(e.graph);
    CHECK(is_connected(g));
    CHECK(g.vertex_count() >= 4);
    CHECK(g.vertex_count() <= 7);
    CHECK((find_strong_retract(g).has_value() || find_distributed_retract(g).has_value()));
  }

  // seeded instances are connected by construction
  for (const auto& e : c.named)
    std::visit([](const auto& g) { CHECK(is_connected(g)); }, e.graph);
}

TEST_CASE("every claim passes on the built-in corpus, deterministically") {
  auto corpus = default_corpus();
  auto results = run_all(corpus);
  REQUIRE(results.size() == kCheckOrder.size());
  for (size_t i = 0; i < results.size(); ++i) {
    CHECK(results[i].id == kCheckOrder[i]);
    CHECK(results[i].status == CheckStatus::Pass);
    CHECK(results[i].witness.is_null());
    CHECK(results[i].instances > 0);
  }
  CHECK(all_passed(results));

  // anchors: the oriented pool and the full undirected sweep
  CHECK(results[0].instances == 705);   // 8 named + 50 witness + 647 enumerated
  CHECK(results[9].instances == 27491); // 15 named + 27476 enumerated

  auto again = run_all(default_corpus());
  CHECK(report_jsonl(results) == report_jsonl(again));
  CHECK(human_summary(results) == human_summary(again));
}

TEST_CASE("report lines follow the schema") {
  auto results = run_all(small_corpus());
  auto text = report_jsonl(results);
  size_t lines = 0, start = 0;
  while (start < text.size()) {
    size_t end = text.find('\n', start);
    REQUIRE(end != std::string::npos);
    auto j = json::parse(text.substr(start, end - start));
    CHECK(j.at("check").is_string());
    CHECK((j.at("status") == "pass" || j.at("status") == "fail" || j.at("status") == "skip"));
    CHECK(j.at("instances").is_number_integer());
    if (j.at("status") == "pass") CHECK_FALSE(j.contains("witness"));
    ++lines;
    start = end + 1;
  }
  CHECK(lines == results.size());

  auto summary = human_summary(results);
  CHECK(summary.find("cop-number-chain") != std::string::npos);
  CHECK(summary.find("13 checks: 13 passed, 0 failed, 0 skipped") != std::string::npos);
}

TEST_CASE("a broken capture test is caught by the checks") {
  VerifyOptions broken;
  broken.solver.disable_capture_detection = true;
  auto results = run_all(small_corpus(), broken);
  CHECK_FALSE(all_passed(results));
  int failed = 0;
  for (const auto& r : results)
    if (r.status == CheckStatus::Fail) {
      ++failed;
      CHECK_FALSE(r.witness.is_null());
      CHECK(r.witness.contains("name"));
    }
  CHECK(failed >= 1);
  // the chain check itself must be among the casualties
  CHECK(results[0].status == CheckStatus::Fail);
}

TEST_CASE("resource limits surface as skips, not failures") {
  VerifyOptions tiny;
  tiny.solver.arena_cap = 100;
  auto results = run_all(small_corpus(), tiny);
  CHECK(all_passed(results)); // skips do not fail the run
  int skipped = 0;
  for (const auto& r : results)
    if (r.status == CheckStatus::Skip) {
      ++skipped;
      CHECK(r.witness.contains("error"));
      CHECK(r.witness.contains("name"));
    }
  CHECK(skipped >= 1);
}

TEST_CASE("the experimental probe runs only on request and reports honestly") {
  auto base = run_all(small_corpus());
  for (const auto& r : base) CHECK(r.id != "undirected-subdivision-probe");

  VerifyOptions with_probe;
  with_probe.probe_undirected_subdivision = true;
  auto results = run_all(small_corpus(), with_probe);
  REQUIRE(results.size() == base.size() + 1);
  const auto& probe = results.back();
  CHECK(probe.id == "undirected-subdivision-probe");
  // played direction-blind, the twice-subdivided triangle needs two cops
  // while the triangle needs one: the probe's claim does not hold in general
  CHECK(probe.status == CheckStatus::Fail);
  CHECK(probe.witness.at("name") == "k3");
  CHECK(probe.witness.at("c") == 1);
  CHECK(probe.witness.at("direction_blind") == 2);
}

TEST_CASE("an empty corpus yields an empty report") {
  Corpus empty{{}, {}, 0, 0};
  CHECK(empty.empty());
  auto results = run_all(empty);
  CHECK(results.empty());
  CHECK(report_jsonl(results).empty());
  CHECK(all_passed(results));
}

TEST_CASE("manifests load graphs, generators and integrity hashes") {
  json manifest = {
      {"exhaustive_oriented_max", 2},
      {"graphs",
       {{{"name", "arc"},
         {"graph",
          {{"directed", true},
           {"vertices", {"a", "b"}},
           {"arcs", json::array({{"a", "b"}})}}}},
        {{"name", "tree"}, {"generator", {{"family", "random-tree"}, {"n", 5}}}}}},
      {"witness_pool",
       {{{"name", "tt"},
         {"graph",
          {{"directed", true},
           {"vertices", {"0", "1", "2"}},
           {"arcs", json::array({{"0", "1"}, {"0", "2"}, {"1", "2"}})}}}}}},
  };
  auto c = corpus_from_json(manifest);
  CHECK(c.named.size() == 2);
  CHECK(c.witness_pool.size() == 1);
  CHECK(c.exhaustive_oriented_max == 2);
  CHECK(c.exhaustive_undirected_max == 0);
  CHECK(std::get<OrientedGraph>(c.named[0].graph).arc_count() == 1);
  CHECK(std::get<UndirectedGraph>(c.named[1].graph).vertex_count() == 5);

  auto results = run_all(c);
  CHECK(results.size() == kCheckOrder.size());
  CHECK(all_passed(results));

  // integrity hash accepted when right, rejected when wrong
  auto canon = io::to_canonical_json(c.named[0].graph);
  manifest["graphs"][0]["sha256"] = io::sha256_hex(canon);
  CHECK(corpus_from_json(manifest).named.size() == 2);
  manifest["graphs"][0]["sha256"] = std::string(64, '0');
  CHECK(kind_of([&] { corpus_from_json(manifest); }) == ErrorKind::Parse);
}

TEST_CASE("malformed manifests are rejected") {
  CHECK(kind_of([] { corpus_from_json(json::array()); }) == ErrorKind::Parse);
  CHECK(kind_of([] {
          corpus_from_json({{"graphs", {{{"graph", {{"directed", false},
                                                    {"vertices", json::array()},
                                                    {"arcs", json::array()}}}}}}});
        }) == ErrorKind::Parse); // no name
  CHECK(kind_of([] {
          corpus_from_json({{"graphs", {{{"name", "x"}}}}});
        }) == ErrorKind::Parse); // neither graph nor generator
  CHECK(kind_of([] {
          corpus_from_json(
              {{"graphs",
                {{{"name", "x"},
                  {"graph",
                   {{"directed", true}, {"vertices", {"a"}}, {"arcs", json::array()}}},
                  {"generator", {{"family", "path"}, {"n", 3}}}}}}});
        }) == ErrorKind::Parse); // both
  CHECK(kind_of([] {
          corpus_from_json(
              {{"graphs",
                {{{"name", "x"}, {"generator", {{"family", "path"}, {"n", 3}}}},
                 {{"name", "x"}, {"generator", {{"family", "path"}, {"n", 4}}}}}}});
        }) == ErrorKind::Parse); // duplicate name
}

TEST_CASE("corpus files round-trip through the loader") {
  std::string path = "verify_corpus_test.json";
  {
    std::ofstream out(path);
    out << R"({"graphs":[{"name":"p3","generator":{"family":"path","n":3}}]})";
  }
  auto c = load_corpus(path);
  CHECK(c.named.size() == 1);
  CHECK(c.named[0].name == "p3");
  CHECK(std::get<UndirectedGraph>(c.named[0].graph).edge_count() == 2);
  std::remove(path.c_str());

  CHECK(kind_of([] { load_corpus("no-such-manifest.json"); }) == ErrorKind::Parse);
}
