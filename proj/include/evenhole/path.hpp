#pragma once

#include <optional>
#include <queue>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace evenhole {

/// A walk through distinct vertices; length is the edge count.
struct Path {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  int front() const { return vertices.front(); }
  int back() const { return vertices.back(); }

  Path reversed() const {
    Path p = *this;
    std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
  }

  bool operator==(const Path& o) const { return vertices == o.vertices; }
};

/// True iff seq is a path of g whose non-consecutive vertices are pairwise
/// non-adjacent. Malformed sequences (repeats, unknown ids) are false, not
/// errors.
inline bool is_induced_path(const Graph& g, const std::vector<int>& seq) {
  if (seq.empty()) return false;
  Bitset seen(std::max(g.vertex_count(), 1));
  for (int v : seq) {
    if (v < 0 || v >= g.vertex_count()) return false;
    if (seen.test(v)) return false;
    seen.set(v);
  }
  int k = static_cast<int>(seq.size());
  for (int i = 0; i + 1 < k; ++i) {
    if (!g.has_edge(seq[i], seq[i + 1])) return false;
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 2; j < k; ++j) {
      if (g.has_edge(seq[i], seq[j])) return false;
    }
  }
  return true;
}

/// BFS distances from `source`; -1 marks unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.vertex_count(), -1);
  dist[source] = 0;
  std::queue<int> q;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

namespace detail {

// Walks back from `target` along BFS layers from the path's smaller endpoint,
// always taking the smallest-index predecessor. `dist` is from that endpoint.
inline std::vector<int> walk_back_canonical(const Graph& g, const std::vector<int>& dist,
                                            int from, int target) {
  std::vector<int> rev{target};
  int cur = target;
  while (cur != from) {
    int pred = -1;
    for (int w : g.neighbors(cur)) {
      if (dist[w] == dist[cur] - 1) {
        pred = w;
        break;  // neighbors are sorted, first hit is smallest
      }
    }
    rev.push_back(pred);
    cur = pred;
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

}  // namespace detail

/// Canonical shortest uv-path: BFS layering from min(u, v) with the
/// smallest-index predecessor rule; the (v, u) orientation is the reverse.
/// Absent when u and v are disconnected.
inline std::optional<Path> shortest_path(const Graph& g, int u, int v) {
  if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
    throw std::out_of_range("vertex id out of range");
  if (u == v) return Path{{u}};
  int s = std::min(u, v), t = std::max(u, v);
  std::vector<int> dist = bfs_distances(g, s);
  if (dist[t] < 0) return std::nullopt;
  Path p{detail::walk_back_canonical(g, dist, s, t)};
  if (u > v) p = p.reversed();
  return p;
}

/// All-pairs distance table plus canonical shortest paths.
class PathTable {
 public:
  explicit PathTable(const Graph& g) : n_(g.vertex_count()), dist_(size_t(n_) * n_, -1) {
    paths_.resize(size_t(n_) * n_);
    for (int s = 0; s < n_; ++s) {
      std::vector<int> d = bfs_distances(g, s);
      for (int t = 0; t < n_; ++t) dist_[idx(s, t)] = d[t];
      for (int t = s + 1; t < n_; ++t) {
        if (d[t] >= 0) paths_[idx(s, t)] = detail::walk_back_canonical(g, d, s, t);
      }
    }
  }

  int vertex_count() const { return n_; }

  /// Distance, or -1 when disconnected.
  int dist(int u, int v) const { return dist_[idx(u, v)]; }
  bool connected(int u, int v) const { return dist(u, v) >= 0; }

  /// Canonical path oriented from u to v; absent when disconnected.
  std::optional<Path> path(int u, int v) const {
    if (u == v) return Path{{u}};
    if (dist(u, v) < 0) return std::nullopt;
    const std::vector<int>& stored = paths_[idx(std::min(u, v), std::max(u, v))];
    Path p{stored};
    if (u > v) p = p.reversed();
    return p;
  }

 private:
  size_t idx(int u, int v) const { return size_t(u) * n_ + v; }

  int n_;
  std::vector<int> dist_;
  std::vector<std::vector<int>> paths_;  // stored for u < v only
};

inline PathTable apsp(const Graph& g) { return PathTable(g); }

}  // namespace evenhole
