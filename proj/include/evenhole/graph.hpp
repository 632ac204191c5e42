#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bitset.hpp"

namespace evenhole {

/// Adjacency bitsets are kept alongside the sorted lists up to this size.
inline constexpr int kBitsetMaxVertices = 512;

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Immutable simple undirected graph on vertex ids 0..n-1.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Rejects self-loops, duplicate edges
  /// and out-of-range endpoints.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    if (n <= kBitsetMaxVertices) g.bits_.assign(n, Bitset(n));
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n) throw std::out_of_range("edge endpoint out of range");
      if (u == v) throw std::invalid_argument("self-loop");
      if (g.has_edge(u, v)) throw std::invalid_argument("duplicate edge");
      g.adj_[u].push_back(v);
      g.adj_[v].push_back(u);
      if (!g.bits_.empty()) {
        g.bits_[u].set(v);
        g.bits_[v].set(u);
      }
      ++g.m_;
    }
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    return g;
  }

  int vertex_count() const { return n_; }
  int edge_count() const { return m_; }

  bool has_edge(int u, int v) const {
    if (!bits_.empty()) return bits_[u].test(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool has_adjacency_bits() const { return !bits_.empty(); }
  const Bitset& adjacency_bits(int v) const { return bits_[v]; }

  /// All edges as (u, v) pairs with u < v, in lexicographic order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u) {
      for (int v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<Bitset> bits_;
};

/// Parses the "p edge" graph format: optional "c" comment lines, one header
/// "p edge <n> <m>", then m lines "e <u> <v>" with 1-indexed endpoints.
/// Endpoints may appear in either order; ids are shifted to 0-indexed.
inline Graph load_graph(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int n = -1;
  long m = -1;
  std::vector<std::pair<int, int>> edges;
  std::vector<Bitset> seen;

  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;  // blank line
    if (tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) throw ParseError(lineno, "duplicate header");
      std::string fmt;
      if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0 || m < 0)
        throw ParseError(lineno, "malformed header, expected 'p edge <n> <m>'");
      std::string rest;
      if (ls >> rest) throw ParseError(lineno, "trailing tokens after header");
      seen.assign(n, Bitset(std::max(n, 1)));
      continue;
    }
    if (tag == "e") {
      if (n < 0) throw ParseError(lineno, "edge before header");
      long u, v;
      if (!(ls >> u >> v)) throw ParseError(lineno, "malformed edge line");
      std::string rest;
      if (ls >> rest) throw ParseError(lineno, "trailing tokens after edge");
      if (u < 1 || u > n || v < 1 || v > n) throw ParseError(lineno, "vertex id out of range");
      if (u == v) throw ParseError(lineno, "self-loop");
      int a = static_cast<int>(u - 1), b = static_cast<int>(v - 1);
      if (seen[a].test(b)) throw ParseError(lineno, "duplicate edge");
      seen[a].set(b);
      seen[b].set(a);
      edges.emplace_back(a, b);
      if (static_cast<long>(edges.size()) > m) throw ParseError(lineno, "more edges than declared");
      continue;
    }
    throw ParseError(lineno, "unknown line type '" + tag + "'");
  }
  if (n < 0) throw ParseError(lineno, "missing header");
  if (static_cast<long>(edges.size()) != m)
    throw ParseError(lineno, "expected " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));
  return Graph::from_edges(n, edges);
}

/// Renders a graph in the file format. Comments first, then the header,
/// then edges sorted lexicographically with u < v, 1-indexed.
inline std::string render_graph(const Graph& g, const std::vector<std::string>& comments = {}) {
  std::ostringstream out;
  for (const auto& c : comments) out << "c " << c << "\n";
  out << "p edge " << g.vertex_count() << " " << g.edge_count() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;    // local id -> parent id, ascending
  std::vector<int> from_parent;  // parent id -> local id, -1 when absent
};

/// Subgraph induced by `vertices` (duplicates ignored), with id maps.
inline InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> vertices) {
  for (int v : vertices) {
    if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex id out of range");
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  InducedSubgraph out;
  out.to_parent = vertices;
  out.from_parent.assign(g.vertex_count(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) out.from_parent[vertices[i]] = i;

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    for (int w : g.neighbors(vertices[i])) {
      int j = out.from_parent[w];
      if (j > i) edges.emplace_back(i, j);
    }
  }
  out.graph = Graph::from_edges(static_cast<int>(vertices.size()), edges);
  return out;
}

/// S together with every neighbor of S.
inline std::vector<int> closed_neighborhood(const Graph& g, const std::vector<int>& vertices) {
  Bitset mark(std::max(g.vertex_count(), 1));
  for (int v : vertices) {
    if (v < 0 || v >= g.vertex_count()) throw std::out_of_range("vertex id out of range");
    mark.set(v);
    for (int w : g.neighbors(v)) mark.set(w);
  }
  return mark.to_vector();
}

}  // namespace evenhole
