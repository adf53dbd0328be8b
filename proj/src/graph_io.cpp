#include "pursuit/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <openssl/evp.h>

namespace pursuit::io {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json arcs_to_json(const std::vector<std::string>& names,
                          const std::vector<std::pair<int, int>>& pairs) {
  ordered_json arr = ordered_json::array();
  for (auto [u, v] : pairs) arr.push_back({names[u], names[v]});
  return arr;
}

ordered_json graph_json(bool directed, const std::vector<std::string>& names,
                        const std::vector<std::pair<int, int>>& pairs) {
  ordered_json j;
  j["directed"] = directed;
  j["vertices"] = names;
  j["arcs"] = arcs_to_json(names, pairs);
  return j;
}

} // namespace

ordered_json graph_to_json(const UndirectedGraph& g) {
  return graph_json(false, g.names(), g.edges());
}

ordered_json graph_to_json(const OrientedGraph& g) {
  return graph_json(true, g.names(), g.arcs());
}

ordered_json graph_to_json(const GraphVariant& g) {
  return std::visit([](const auto& x) { return graph_to_json(x); }, g);
}

std::string to_canonical_json(const GraphVariant& g) {
  return graph_to_json(g).dump();
}

GraphVariant graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("directed") || !j.contains("vertices") ||
      !j.contains("arcs"))
    fail(ErrorKind::Parse, "graph JSON needs \"directed\", \"vertices\" and \"arcs\"");
  if (!j["directed"].is_boolean())
    fail(ErrorKind::Parse, "\"directed\" must be a boolean");
  if (!j["vertices"].is_array())
    fail(ErrorKind::Parse, "\"vertices\" must be an array of names");

  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) fail(ErrorKind::Parse, "vertex names must be strings");
    std::string name = v.get<std::string>();
    if (!index.emplace(name, static_cast<int>(names.size())).second)
      fail(ErrorKind::Parse, "duplicate vertex \"" + name + "\"");
    names.push_back(std::move(name));
  }

  std::vector<std::pair<int, int>> pairs;
  if (!j["arcs"].is_array()) fail(ErrorKind::Parse, "\"arcs\" must be an array");
  for (const auto& a : j["arcs"]) {
    if (!a.is_array() || a.size() != 2 || !a[0].is_string() || !a[1].is_string())
      fail(ErrorKind::Parse, "each arc must be a pair of vertex names");
    auto u = index.find(a[0].get<std::string>());
    auto v = index.find(a[1].get<std::string>());
    if (u == index.end())
      fail(ErrorKind::Parse, "arc refers to unknown vertex \"" + a[0].get<std::string>() + "\"");
    if (v == index.end())
      fail(ErrorKind::Parse, "arc refers to unknown vertex \"" + a[1].get<std::string>() + "\"");
    pairs.push_back({u->second, v->second});
  }

  if (j["directed"].get<bool>())
    return OrientedGraph(std::move(names), pairs);
  return UndirectedGraph(std::move(names), pairs);
}

GraphVariant parse_graph_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(ErrorKind::Parse, "malformed JSON");
  return graph_from_json(j);
}

GraphVariant load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open \"" + path + "\"");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph_json(buf.str());
}

GraphVariant parse_edge_list(const std::string& text, bool directed) {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;
  auto intern = [&](const std::string& tok) {
    auto [it, inserted] = index.emplace(tok, static_cast<int>(names.size()));
    if (inserted) names.push_back(tok);
    return it->second;
  };
  std::vector<std::pair<int, int>> pairs;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) continue; // blank
    if (!(ls >> b) || (ls >> extra))
      fail(ErrorKind::Parse, "line " + std::to_string(lineno) + ": expected \"u v\"");
    pairs.push_back({intern(a), intern(b)});
  }
  if (directed) return OrientedGraph(std::move(names), pairs);
  return UndirectedGraph(std::move(names), pairs);
}

namespace {
std::string dot_quote(const std::string& s) {
  std::string r = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') r += '\\';
    r += c;
  }
  return r + "\"";
}
} // namespace

std::string to_dot(const UndirectedGraph& g) {
  std::string out = "graph {\n";
  for (const auto& n : g.names()) out += "  " + dot_quote(n) + ";\n";
  for (auto [u, v] : g.edges())
    out += "  " + dot_quote(g.name(u)) + " -- " + dot_quote(g.name(v)) + ";\n";
  return out + "}\n";
}

std::string to_dot(const OrientedGraph& g) {
  std::string out = "digraph {\n";
  for (const auto& n : g.names()) out += "  " + dot_quote(n) + ";\n";
  for (auto [u, v] : g.arcs())
    out += "  " + dot_quote(g.name(u)) + " -> " + dot_quote(g.name(v)) + ";\n";
  return out + "}\n";
}

std::string to_dot(const GraphVariant& g) {
  return std::visit([](const auto& x) { return to_dot(x); }, g);
}

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr))
    fail(ErrorKind::Internal, "sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 0xf];
  }
  return out;
}

bool is_directed(const GraphVariant& g) {
  return std::holds_alternative<OrientedGraph>(g);
}

const OrientedGraph& expect_oriented(const GraphVariant& g, const std::string& what) {
  if (!is_directed(g))
    fail(ErrorKind::InvalidParameter, what + " needs a directed graph");
  return std::get<OrientedGraph>(g);
}

const UndirectedGraph& expect_undirected(const GraphVariant& g, const std::string& what) {
  if (is_directed(g))
    fail(ErrorKind::InvalidParameter, what + " needs an undirected graph");
  return std::get<UndirectedGraph>(g);
}

} // namespace pursuit::io
