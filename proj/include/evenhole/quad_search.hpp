#pragma once

#include <mutex>
#include <optional>
#include <vector>

#include "graph.hpp"
#include "hole.hpp"
#include "parallel.hpp"
#include "path.hpp"
#include "shortcuts.hpp"

namespace evenhole {

/// One evaluated quadruple of the quad search: vertex-disjoint edges ux and
/// vy with their canonical shortest paths, the shortest uv-path of the
/// restricted graph when one exists, and the verified even hole glued from
/// p_xy and q when the union forms one.
struct QuadCandidate {
  int u = -1, v = -1, x = -1, y = -1;
  Path p_uv;
  Path p_xy;
  std::optional<Path> q;
  std::optional<Hole> candidate_hole;
};

/// The restriction used by the quad search: delete the closed neighborhood
/// of every vertex of p_uv and p_xy except u and v, then put u and v back.
inline InducedSubgraph quad_restriction(const Graph& g, const Path& p_uv, const Path& p_xy,
                                        int u, int v) {
  if (p_uv.front() != u || p_uv.back() != v)
    throw std::invalid_argument("u and v must be the endpoints of p_uv");
  std::vector<int> interior;
  for (int w : p_uv.vertices) {
    if (w != u && w != v) interior.push_back(w);
  }
  for (int w : p_xy.vertices) {
    if (w != u && w != v) interior.push_back(w);
  }
  Bitset removed(std::max(g.vertex_count(), 1));
  for (int w : closed_neighborhood(g, interior)) removed.set(w);
  removed.reset(u);
  removed.reset(v);
  std::vector<int> keep;
  keep.reserve(g.vertex_count());
  for (int w = 0; w < g.vertex_count(); ++w) {
    if (!removed.test(w)) keep.push_back(w);
  }
  return induced_subgraph(g, keep);
}

/// Evaluates the quad (u, x, v, y): p_uv and p_xy are the canonical shortest
/// paths, q the canonical shortest uv-path of the restriction, and
/// candidate_hole the glued subgraph when it verifies as an even hole.
/// Absent when u,v or x,y are disconnected in g.
inline std::optional<QuadCandidate> evaluate_quad(const Graph& g, const PathTable& t, int u,
                                                  int x, int v, int y) {
  std::optional<Path> p_uv = t.path(u, v);
  std::optional<Path> p_xy = t.path(x, y);
  if (!p_uv || !p_xy) return std::nullopt;
  QuadCandidate c;
  c.u = u;
  c.v = v;
  c.x = x;
  c.y = y;
  c.p_uv = *p_uv;
  c.p_xy = *p_xy;

  InducedSubgraph h = quad_restriction(g, c.p_uv, c.p_xy, u, v);
  std::optional<Path> local_q = shortest_path(h.graph, h.from_parent[u], h.from_parent[v]);
  if (!local_q) return c;
  Path q;
  q.vertices.reserve(local_q->vertices.size());
  for (int w : local_q->vertices) q.vertices.push_back(h.to_parent[w]);
  c.q = q;

  std::optional<Hole> hole = hole_from_vertices(g, detail::union_vertices(c.p_xy, q));
  if (hole && hole->even()) c.candidate_hole = hole;
  return c;
}

/// Scans all ordered pairs of vertex-disjoint edges (u,x), (v,y) whose
/// canonical shortest-path lengths satisfy |p_uv| = |p_xy| ± 1, and returns
/// the minimum verified even hole glued from p_xy and the restricted
/// shortest uv-path, or absent. Any result is an even hole of g; when some
/// bad shortest even hole has a shallow worst shortcut, the result is a
/// shortest even hole of g.
inline std::optional<Hole> quad_search(const Graph& g, int threads = 1) {
  int n = g.vertex_count();
  if (n < 4) return std::nullopt;
  PathTable t = apsp(g);

  std::vector<std::pair<int, int>> arcs;  // directed edges (u, x)
  for (int u = 0; u < n; ++u) {
    for (int x : g.neighbors(u)) arcs.emplace_back(u, x);
  }

  std::mutex best_mutex;
  std::optional<Hole> best;

  parallel_branches(static_cast<int>(arcs.size()), threads, [&](int i) {
    auto [u, x] = arcs[i];
    std::optional<Hole> local;
    for (auto [v, y] : arcs) {
      if (u == v || u == y || x == v || x == y) continue;
      int duv = t.dist(u, v);
      int dxy = t.dist(x, y);
      if (duv < 0 || dxy < 0) continue;
      if (duv != dxy + 1 && duv != dxy - 1) continue;
      std::optional<QuadCandidate> c = evaluate_quad(g, t, u, x, v, y);
      if (c && c->candidate_hole) {
        if (!local || *c->candidate_hole < *local) local = c->candidate_hole;
      }
    }
    if (local) {
      std::lock_guard<std::mutex> lock(best_mutex);
      if (!best || *local < *best) best = local;
    }
  });
  return best;
}

}  // namespace evenhole
