#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"
#include "hole.hpp"
#include "path.hpp"
#include "shortcuts.hpp"

namespace evenhole {

/// A graph is long when it has no even hole with at most this many vertices.
inline constexpr int kLongThreshold = 22;

/// graph_status refuses larger inputs unless forced; its quantifiers are
/// exponential.
inline constexpr int kStatusGuardMaxVertices = 24;

/// Visits every induced cycle of length in [4, max_len], each exactly once,
/// in canonical form (anchored at its minimum vertex, oriented toward the
/// smaller neighbor). Visit returns false to stop; so does this function.
template <class Visit>
bool for_each_induced_cycle(const Graph& g, int max_len, Visit&& visit) {
  int n = g.vertex_count();
  if (max_len < 4 || n < 4) return true;

  std::vector<int> path;
  Bitset in_path(n);

  // path = [s, a, x...]: an induced path whose interior avoids N(s); a vertex
  // adjacent to s and beyond a closes a cycle.
  auto dfs = [&](auto&& self, int s) -> bool {
    int last = path.back();
    int p = static_cast<int>(path.size());
    for (int w : g.neighbors(last)) {
      if (w <= s || in_path.test(w)) continue;
      bool chord = false;
      for (int i = 1; i + 1 < p; ++i) {
        if (g.has_edge(w, path[i])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (g.has_edge(w, s)) {
        if (w > path[1] && p >= 3 && p + 1 <= max_len) {
          path.push_back(w);
          bool keep_going = visit(path);
          path.pop_back();
          if (!keep_going) return false;
        }
        continue;  // vertices adjacent to s cannot be interior
      }
      if (p + 2 <= max_len) {
        path.push_back(w);
        in_path.set(w);
        bool keep_going = self(self, s);
        path.pop_back();
        in_path.reset(w);
        if (!keep_going) return false;
      }
    }
    return true;
  };

  for (int s = 0; s < n; ++s) {
    for (int a : g.neighbors(s)) {
      if (a <= s) continue;
      path.assign({s, a});
      in_path.set(s);
      in_path.set(a);
      bool keep_going = dfs(dfs, s);
      in_path.reset(s);
      in_path.reset(a);
      if (!keep_going) return false;
    }
  }
  return true;
}

/// All induced cycles of length in [4, max_len], canonical, duplicate-free.
inline std::vector<Hole> enumerate_induced_cycles(const Graph& g, int max_len) {
  std::vector<Hole> out;
  for_each_induced_cycle(g, max_len, [&](const std::vector<int>& cycle) {
    out.push_back(Hole{cycle});
    return true;
  });
  return out;
}

/// Minimum-length even hole by exhaustive enumeration, ties broken by
/// canonical sequence. Intended for desk-scale inputs.
inline std::optional<Hole> shortest_even_hole_brute(const Graph& g) {
  std::optional<Hole> best;
  for_each_induced_cycle(g, g.vertex_count(), [&](const std::vector<int>& cycle) {
    if (cycle.size() % 2 != 0) return true;
    Hole h{cycle};
    if (!best || h < *best) best = std::move(h);
    return true;
  });
  return best;
}

/// Existence check with early exit on the first even hole.
inline bool has_even_hole(const Graph& g) {
  bool found = false;
  for_each_induced_cycle(g, g.vertex_count(), [&](const std::vector<int>& cycle) {
    if (cycle.size() % 2 == 0) {
      found = true;
      return false;
    }
    return true;
  });
  return found;
}

/// Shortest even hole when its length is at most L, otherwise absent.
/// Absent with L = 22 certifies the graph is long. Shortest-first search:
/// the enumeration bound shrinks to the best even length found so far.
inline std::optional<Hole> bounded_shortest_even_hole(const Graph& g, int L) {
  if (L < 4) throw std::invalid_argument("bound must be at least 4");
  int n = g.vertex_count();
  if (n < 4) return std::nullopt;

  std::optional<std::vector<int>> best;
  int bound = std::min(L, n);

  std::vector<int> path;
  Bitset in_path(n);

  auto dfs = [&](auto&& self, int s) -> void {
    int last = path.back();
    int p = static_cast<int>(path.size());
    for (int w : g.neighbors(last)) {
      if (w <= s || in_path.test(w)) continue;
      bool chord = false;
      for (int i = 1; i + 1 < p; ++i) {
        if (g.has_edge(w, path[i])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (g.has_edge(w, s)) {
        if (w > path[1] && p >= 3 && p + 1 <= bound && (p + 1) % 2 == 0) {
          path.push_back(w);
          if (!best || p + 1 < static_cast<int>(best->size()) ||
              (p + 1 == static_cast<int>(best->size()) && path < *best)) {
            best = path;
            bound = p + 1;
          }
          path.pop_back();
        }
        continue;
      }
      if (p + 2 <= bound) {
        path.push_back(w);
        in_path.set(w);
        self(self, s);
        path.pop_back();
        in_path.reset(w);
      }
    }
  };

  for (int s = 0; s < n; ++s) {
    for (int a : g.neighbors(s)) {
      if (a <= s) continue;
      path.assign({s, a});
      in_path.set(s);
      in_path.set(a);
      dfs(dfs, s);
      in_path.reset(s);
      in_path.reset(a);
    }
  }
  if (!best) return std::nullopt;
  return Hole{*best};
}

/// Classification of a graph against the shortcut taxonomy, evaluated
/// literally from the definitions by exhaustive enumeration.
struct GraphStatus {
  bool has_even_hole = false;
  std::optional<int> shortest_even_length;
  bool is_long = false;
  bool is_shallow = false;
  bool is_anti_shallow = false;
  bool is_bad = false;
};

inline GraphStatus graph_status(const Graph& g, bool force = false) {
  if (g.vertex_count() > kStatusGuardMaxVertices && !force)
    throw std::invalid_argument("graph_status is guarded to n <= " +
                                std::to_string(kStatusGuardMaxVertices) +
                                "; set force to override");
  GraphStatus st;
  std::optional<Hole> se = shortest_even_hole_brute(g);
  st.has_even_hole = se.has_value();
  if (se) st.shortest_even_length = se->length();
  st.is_long = !bounded_shortest_even_hole(g, kLongThreshold).has_value();
  if (!se) {
    st.is_shallow = false;
    st.is_anti_shallow = true;  // vacuous
    st.is_bad = false;
    return st;
  }

  bool any_good = false;
  bool some_hole_all_worst_shallow = false;
  bool every_bad_worst_not_shallow = true;
  for_each_induced_cycle(g, se->length(), [&](const std::vector<int>& cycle) {
    if (static_cast<int>(cycle.size()) != se->length() || cycle.size() % 2 != 0) return true;
    Hole C{cycle};
    WorstShortcutSet worst = worst_shortcuts(g, C);
    if (worst.empty()) {
      any_good = true;
      some_hole_all_worst_shallow = true;  // vacuous
      return true;
    }
    bool all_shallow = true;
    bool any_shallow = false;
    for (const ShortcutRecord& r : worst.records) {
      all_shallow = all_shallow && r.is_shallow;
      any_shallow = any_shallow || r.is_shallow;
    }
    if (all_shallow) some_hole_all_worst_shallow = true;
    if (any_shallow) every_bad_worst_not_shallow = false;
    return true;
  });
  st.is_bad = !any_good;
  st.is_shallow = some_hole_all_worst_shallow;
  st.is_anti_shallow = every_bad_worst_not_shallow;
  return st;
}

/// Visits every induced path from `from` to `to` with at most max_edges
/// edges, interior unrestricted. Visit returns false to stop.
template <class Visit>
bool for_each_induced_path(const Graph& g, int from, int to, int max_edges, Visit&& visit) {
  if (from == to) return visit(std::vector<int>{from});
  int n = g.vertex_count();
  std::vector<int> path{from};
  Bitset in_path(n);
  in_path.set(from);

  auto dfs = [&](auto&& self) -> bool {
    int last = path.back();
    int p = static_cast<int>(path.size());
    for (int w : g.neighbors(last)) {
      if (in_path.test(w)) continue;
      bool chord = false;
      for (int i = 0; i + 1 < p; ++i) {
        if (g.has_edge(w, path[i])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (w == to) {
        path.push_back(w);
        bool keep_going = visit(path);
        path.pop_back();
        if (!keep_going) return false;
        continue;
      }
      if (p < max_edges) {  // extending still allows closing within the bound
        path.push_back(w);
        in_path.set(w);
        bool keep_going = self(self);
        path.pop_back();
        in_path.reset(w);
        if (!keep_going) return false;
      }
    }
    return true;
  };
  return dfs(dfs);
}

/// One failed statement of the shallow worst-shortcut property check.
struct ShortcutPropertyViolation {
  int statement;  // 1..4, see check_shallow_shortcut_properties
  std::string detail;
};

namespace detail {

inline Path orient_from_min(const Path& p) {
  return p.front() <= p.back() ? p : p.reversed();
}

}  // namespace detail

/// Checks the four properties of a shallow worst shortcut P of a shortest
/// even hole C, with u, v = endpoints of P, C1/C2 the shorter/longer arcs,
/// x/y the C1-neighbors of u/v and C3 the xy-part of C1:
///   1. every uv-path of g has length >= |P|;
///   2. every uv-path of length |P| glues with C2 into a hole;
///   3. every xy-path of g has length >= |C3|;
///   4. every xy-path of length |C3| glues with C2 into a hole.
/// Returns the violations (empty when all hold). Throws when the
/// precondition fails: C must be a shortest even hole of g and P one of its
/// shallow worst shortcuts, both verified here by brute force.
inline std::vector<ShortcutPropertyViolation> check_shallow_shortcut_properties(const Graph& g,
                                                                                const Hole& C,
                                                                                const Path& P) {
  std::optional<Hole> valid = validate_hole(g, C.cycle);
  if (!valid || !valid->even()) throw std::invalid_argument("C is not an even hole of g");
  std::optional<Hole> se = shortest_even_hole_brute(g);
  if (!se || se->length() != C.length())
    throw std::invalid_argument("C is not a shortest even hole of g");

  Path p = detail::orient_from_min(P);
  WorstShortcutSet worst = worst_shortcuts(g, *valid);
  bool is_worst = false;
  for (const ShortcutRecord& r : worst.records) is_worst = is_worst || r.path == p;
  if (!is_worst) throw std::invalid_argument("P is not a worst shortcut of C");
  if (!is_shallow_path(g, *valid, p)) throw std::invalid_argument("P is not shallow for C");

  int u = p.front(), v = p.back();
  ArcPair arcs = hole_arcs(*valid, u, v);
  if (arcs.shorter.length() == arcs.longer.length())
    throw std::invalid_argument("arcs of equal length; the shorter arc is not determined");
  const Path& c1 = arcs.shorter;
  const Path& c2 = arcs.longer;
  int x = c1.vertices[1];
  int y = c1.vertices[c1.vertices.size() - 2];
  Path c3{std::vector<int>(c1.vertices.begin() + 1, c1.vertices.end() - 1)};

  std::vector<ShortcutPropertyViolation> out;
  auto glue_is_hole = [&](const std::vector<int>& other) {
    return hole_from_vertices(g, detail::union_vertices(Path{other}, c2)).has_value();
  };

  std::vector<int> d_u = bfs_distances(g, u);
  if (d_u[v] >= 0 && d_u[v] < p.length())
    out.push_back({1, "canonical shortest uv-path is shorter than P"});
  for_each_induced_path(g, u, v, p.length(), [&](const std::vector<int>& puv) {
    int len = static_cast<int>(puv.size()) - 1;
    if (len < p.length()) {
      out.push_back({1, "uv-path of length " + std::to_string(len) + " beats P"});
    } else if (len == p.length() && !glue_is_hole(puv)) {
      out.push_back({2, "equal-length uv-path does not glue with the longer arc into a hole"});
    }
    return true;
  });

  std::vector<int> d_x = bfs_distances(g, x);
  if (x == y ? false : (d_x[y] < 0 || d_x[y] < c3.length()))
    out.push_back({3, "canonical shortest xy-path is shorter than the inner arc"});
  for_each_induced_path(g, x, y, c3.length(), [&](const std::vector<int>& pxy) {
    int len = static_cast<int>(pxy.size()) - 1;
    if (len < c3.length()) {
      out.push_back({3, "xy-path of length " + std::to_string(len) + " beats the inner arc"});
    } else if (len == c3.length() && !glue_is_hole(pxy)) {
      out.push_back({4, "equal-length xy-path does not glue with the longer arc into a hole"});
    }
    return true;
  });

  return out;
}

}  // namespace evenhole
