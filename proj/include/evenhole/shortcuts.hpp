#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "hole.hpp"
#include "path.hpp"

namespace evenhole {

/// The two uv-paths along a hole, ordered by length (ties by vertex
/// sequence), both oriented from u to v. hole_distance is the shorter length.
struct ArcPair {
  Path shorter;
  Path longer;
  int hole_distance;
};

inline ArcPair hole_arcs(const Hole& C, int u, int v) {
  if (u == v) throw std::invalid_argument("arc endpoints must be distinct");
  int k = C.length();
  int pu = -1, pv = -1;
  for (int i = 0; i < k; ++i) {
    if (C.cycle[i] == u) pu = i;
    if (C.cycle[i] == v) pv = i;
  }
  if (pu < 0 || pv < 0) throw std::invalid_argument("vertex not on the hole");

  Path fwd, bwd;  // from u to v, walking the cycle in each direction
  for (int i = pu;; i = (i + 1) % k) {
    fwd.vertices.push_back(C.cycle[i]);
    if (i == pv) break;
  }
  for (int i = pu;; i = (i - 1 + k) % k) {
    bwd.vertices.push_back(C.cycle[i]);
    if (i == pv) break;
  }
  bool fwd_first = fwd.length() != bwd.length() ? fwd.length() < bwd.length()
                                                : fwd.vertices < bwd.vertices;
  ArcPair out{fwd_first ? fwd : bwd, fwd_first ? bwd : fwd, 0};
  out.hole_distance = out.shorter.length();
  return out;
}

/// Distance between two vertices along the hole (shorter arc length).
inline int hole_distance(const Hole& C, int u, int v) {
  int k = C.length();
  int pu = -1, pv = -1;
  for (int i = 0; i < k; ++i) {
    if (C.cycle[i] == u) pu = i;
    if (C.cycle[i] == v) pv = i;
  }
  if (pu < 0 || pv < 0) throw std::invalid_argument("vertex not on the hole");
  int d = std::abs(pu - pv);
  return std::min(d, k - d);
}

namespace detail {

// Shared precondition of the shortcut predicates: P is an induced uv-path of
// g whose endpoints are distinct, nonadjacent vertices of C and whose
// interior avoids C.
inline void require_shortcut_shape(const Graph& g, const Hole& C, const Path& P) {
  if (P.vertices.size() < 2) throw std::invalid_argument("path has no edges");
  int u = P.front(), v = P.back();
  if (u == v) throw std::invalid_argument("path endpoints coincide");
  if (!C.contains(u) || !C.contains(v))
    throw std::invalid_argument("path endpoint not on the hole");
  if (g.has_edge(u, v)) throw std::invalid_argument("path endpoints are adjacent");
  if (!is_induced_path(g, P.vertices)) throw std::invalid_argument("not an induced path");
  for (size_t i = 1; i + 1 < P.vertices.size(); ++i) {
    if (C.contains(P.vertices[i]))
      throw std::invalid_argument("path interior touches the hole");
  }
}

inline std::vector<int> union_vertices(const Path& a, const Path& b) {
  std::vector<int> s = a.vertices;
  s.insert(s.end(), b.vertices.begin(), b.vertices.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace detail

/// P qualifies as a shortcut of C: 2 <= |P| <= d_C(u,v) and 4|P| < |C|.
inline bool is_shortcut(const Graph& g, const Hole& C, const Path& P) {
  detail::require_shortcut_shape(g, C, P);
  int len = P.length();
  int d = hole_distance(C, P.front(), P.back());
  return 2 <= len && len <= d && 4 * len < C.length();
}

/// P is good for C: gluing P onto one arc of C yields an even hole of the
/// same length as C. Caller asserts C is a shortest even hole of g.
inline bool is_good_path(const Graph& g, const Hole& C, const Path& P) {
  detail::require_shortcut_shape(g, C, P);
  ArcPair arcs = hole_arcs(C, P.front(), P.back());
  for (const Path* arc : {&arcs.shorter, &arcs.longer}) {
    if (P.length() + arc->length() != C.length()) continue;
    auto h = hole_from_vertices(g, detail::union_vertices(P, *arc));
    if (h && h->even()) return true;
  }
  return false;
}

/// P is shallow for C: |P| >= d_C(u,v) - 1 and gluing P onto the longer arc
/// yields a hole.
inline bool is_shallow_path(const Graph& g, const Hole& C, const Path& P) {
  detail::require_shortcut_shape(g, C, P);
  ArcPair arcs = hole_arcs(C, P.front(), P.back());
  if (P.length() < arcs.hole_distance - 1) return false;
  return hole_from_vertices(g, detail::union_vertices(P, arcs.longer)).has_value();
}

/// A classified shortcut of a hole.
struct ShortcutRecord {
  Path path;
  int hole_distance = 0;
  bool is_shortcut = false;
  bool is_good = false;
  bool is_shallow = false;
};

namespace detail {

// Enumerates every induced path between nonadjacent hole vertices whose
// interior avoids the hole, with 2 <= length <= min(d_C, ceil(|C|/4) - 1).
// Paths are oriented from the smaller endpoint and visited in lexicographic
// order. visit returns false to stop.
template <class Visit>
bool for_each_shortcut(const Graph& g, const Hole& C, Visit&& visit) {
  int n = g.vertex_count();
  int max_len = (C.length() - 1) / 4;  // 4*len < |C|
  if (max_len < 2) return true;

  Bitset on_hole(std::max(n, 1));
  for (int v : C.cycle) on_hole.set(v);

  std::vector<int> hole_vertices = C.cycle;
  std::sort(hole_vertices.begin(), hole_vertices.end());

  std::vector<int> path;
  Bitset in_path(std::max(n, 1));

  // dfs returns false when the visitor asked to stop.
  auto dfs = [&](auto&& self, int u, int v, int cap) -> bool {
    int last = path.back();
    for (int w : g.neighbors(last)) {
      if (on_hole.test(w) || in_path.test(w)) continue;
      bool chord = false;
      for (size_t i = 0; i + 1 < path.size(); ++i) {
        if (g.has_edge(w, path[i])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      path.push_back(w);
      in_path.set(w);
      if (g.has_edge(w, v)) {
        bool closes_induced = true;
        for (size_t i = 1; i + 1 < path.size(); ++i) {
          if (g.has_edge(v, path[i])) {
            closes_induced = false;
            break;
          }
        }
        if (closes_induced && static_cast<int>(path.size()) >= 2) {
          Path p;
          p.vertices = path;
          p.vertices.push_back(v);
          if (p.length() >= 2 && !visit(p)) {
            path.pop_back();
            in_path.reset(w);
            return false;
          }
        }
      }
      if (static_cast<int>(path.size()) < cap) {  // room for another interior vertex
        if (!self(self, u, v, cap)) {
          path.pop_back();
          in_path.reset(w);
          return false;
        }
      }
      path.pop_back();
      in_path.reset(w);
    }
    return true;
  };

  for (size_t i = 0; i < hole_vertices.size(); ++i) {
    for (size_t j = i + 1; j < hole_vertices.size(); ++j) {
      int u = hole_vertices[i], v = hole_vertices[j];
      if (g.has_edge(u, v)) continue;
      int cap = std::min(max_len, hole_distance(C, u, v));
      if (cap < 2) continue;
      path.assign(1, u);
      in_path.set(u);
      if (!dfs(dfs, u, v, cap)) {
        in_path.reset(u);
        return false;
      }
      in_path.reset(u);
    }
  }
  return true;
}

}  // namespace detail

/// All bad shortcuts of C, classified, in canonical path order.
/// Caller asserts C is a shortest even hole of g.
inline std::vector<ShortcutRecord> enumerate_bad_shortcuts(const Graph& g, const Hole& C) {
  std::vector<ShortcutRecord> out;
  detail::for_each_shortcut(g, C, [&](const Path& p) {
    ShortcutRecord rec;
    rec.path = p;
    rec.hole_distance = hole_distance(C, p.front(), p.back());
    rec.is_shortcut = is_shortcut(g, C, p);
    rec.is_good = is_good_path(g, C, p);
    rec.is_shallow = is_shallow_path(g, C, p);
    if (rec.is_shortcut && !rec.is_good) out.push_back(std::move(rec));
    return true;
  });
  std::sort(out.begin(), out.end(), [](const ShortcutRecord& a, const ShortcutRecord& b) {
    return a.path.vertices < b.path.vertices;
  });
  return out;
}

/// True iff C has no bad shortcut.
inline bool is_good_hole(const Graph& g, const Hole& C) {
  bool good = true;
  detail::for_each_shortcut(g, C, [&](const Path& p) {
    if (is_shortcut(g, C, p) && !is_good_path(g, C, p)) {
      good = false;
      return false;
    }
    return true;
  });
  return good;
}

/// The bad shortcuts achieving the lexicographic minimum of
/// (length, -hole_distance). Empty iff C is good.
struct WorstShortcutSet {
  std::vector<ShortcutRecord> records;

  bool empty() const { return records.empty(); }
};

inline WorstShortcutSet worst_shortcuts(const Graph& g, const Hole& C) {
  std::vector<ShortcutRecord> bad = enumerate_bad_shortcuts(g, C);
  WorstShortcutSet out;
  if (bad.empty()) return out;
  auto key = [](const ShortcutRecord& r) { return std::pair(r.path.length(), -r.hole_distance); };
  auto best = key(bad[0]);
  for (const ShortcutRecord& r : bad) best = std::min(best, key(r));
  for (ShortcutRecord& r : bad) {
    if (key(r) == best) out.records.push_back(std::move(r));
  }
  return out;
}

}  // namespace evenhole
