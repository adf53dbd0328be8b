#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pursuit/graph.hpp"

namespace pursuit {

/// Deterministic pseudo-random stream (splitmix64). Pinned to one published
/// algorithm so a (family, n, seed) triple denotes the same graph on every
/// platform; the C++ standard distributions make no such promise.
struct SplitMix64 {
  uint64_t state = 0;
  explicit SplitMix64(uint64_t seed) : state(seed) {}
  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  bool coin() { return next() & 1; }
  /// Uniform in [0,1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  /// Uniform in [0, bound); bound-biased by at most 2^-53 relative error,
  /// irrelevant at graph sizes and kept for cross-platform stability.
  uint64_t below(uint64_t bound) {
    return static_cast<uint64_t>(unit() * static_cast<double>(bound));
  }
};

enum class Family {
  Path,
  Cycle,
  Complete,
  Star,
  RandomTree,
  RandomGraph,
  RandomBipartite,
  Tournament,
  RandomOrientation,
};

const char* to_string(Family f);
Family family_from_string(const std::string& s);

/// RandomOrientation wraps an undirected family in `of` (sizes must agree);
/// its own seed drives the edge-direction coins while the inner spec
/// generates the undirected graph from its own seed.
struct GeneratorSpec {
  Family family = Family::Path;
  int n = 2;
  uint64_t seed = 0;
  double p = 0.5; // RandomGraph and RandomBipartite only
  std::shared_ptr<GeneratorSpec> of;
};

using GraphVariant = std::variant<UndirectedGraph, OrientedGraph>;

GraphVariant generate(const GeneratorSpec& spec);

nlohmann::ordered_json spec_json(const GeneratorSpec& spec);
GeneratorSpec spec_from_json(const nlohmann::json& j);

/// Every connected graph on n labeled vertices, exactly once, in increasing
/// edge-set (undirected) or base-3 arc-code (oriented) order. Caps: n <= 7
/// undirected, n <= 5 oriented; beyond raises ErrorKind::ResourceLimit.
void enumerate_connected_undirected(int n, const std::function<void(const UndirectedGraph&)>& fn);
void enumerate_connected_oriented(int n, const std::function<void(const OrientedGraph&)>& fn);

uint64_t count_connected_undirected(int n);
uint64_t count_connected_oriented(int n);

} // namespace pursuit
