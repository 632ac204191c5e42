#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "path.hpp"

namespace evenhole {

/// An induced cycle of length >= 4 in canonical form: the sequence starts at
/// its minimum vertex and proceeds toward the smaller of that vertex's two
/// cycle neighbors. Canonical form is unique per cycle.
struct Hole {
  std::vector<int> cycle;

  int length() const { return static_cast<int>(cycle.size()); }
  bool even() const { return length() % 2 == 0; }
  bool contains(int v) const {
    for (int c : cycle) {
      if (c == v) return true;
    }
    return false;
  }

  bool operator==(const Hole& o) const { return cycle == o.cycle; }

  /// Orders by length, then by canonical sequence.
  bool operator<(const Hole& o) const {
    if (length() != o.length()) return length() < o.length();
    return cycle < o.cycle;
  }
};

/// Rotation/reflection representative of a cyclic sequence.
inline std::vector<int> canonical_cycle(const std::vector<int>& seq) {
  int k = static_cast<int>(seq.size());
  int at = 0;
  for (int i = 1; i < k; ++i) {
    if (seq[i] < seq[at]) at = i;
  }
  int fwd = seq[(at + 1) % k];
  int bwd = seq[(at - 1 + k) % k];
  std::vector<int> out;
  out.reserve(k);
  int step = fwd < bwd ? 1 : -1;
  for (int i = 0, p = at; i < k; ++i, p = (p + step + k) % k) out.push_back(seq[p]);
  return out;
}

/// Canonical Hole iff seq is an induced cycle of length >= 4 in g.
/// Absent signals any non-hole, malformed ids included.
inline std::optional<Hole> validate_hole(const Graph& g, const std::vector<int>& seq) {
  int k = static_cast<int>(seq.size());
  if (k < 4) return std::nullopt;
  Bitset seen(std::max(g.vertex_count(), 1));
  for (int v : seq) {
    if (v < 0 || v >= g.vertex_count()) return std::nullopt;
    if (seen.test(v)) return std::nullopt;
    seen.set(v);
  }
  for (int i = 0; i < k; ++i) {
    int a = seq[i], b = seq[(i + 1) % k];
    if (!g.has_edge(a, b)) return std::nullopt;
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 2; j < k; ++j) {
      if (i == 0 && j == k - 1) continue;  // cycle edge, not a chord
      if (g.has_edge(seq[i], seq[j])) return std::nullopt;
    }
  }
  return Hole{canonical_cycle(seq)};
}

/// Canonical Hole iff the induced subgraph on `vertices` is a single cycle of
/// length >= 4: every vertex has exactly two neighbors in the set and the set
/// is connected.
inline std::optional<Hole> hole_from_vertices(const Graph& g, const std::vector<int>& vertices) {
  int k = static_cast<int>(vertices.size());
  if (k < 4) return std::nullopt;
  Bitset in(std::max(g.vertex_count(), 1));
  for (int v : vertices) {
    if (v < 0 || v >= g.vertex_count()) return std::nullopt;
    if (in.test(v)) return std::nullopt;
    in.set(v);
  }
  for (int v : vertices) {
    int deg = 0;
    for (int w : g.neighbors(v)) deg += in.test(w);
    if (deg != 2) return std::nullopt;
  }
  // 2-regular and connected means a single cycle; walk it.
  std::vector<int> seq;
  seq.reserve(k);
  int start = vertices[0];
  for (int v : vertices) start = std::min(start, v);
  int prev = -1, cur = start;
  do {
    seq.push_back(cur);
    int next = -1;
    for (int w : g.neighbors(cur)) {
      if (in.test(w) && w != prev) {
        next = w;
        break;
      }
    }
    prev = cur;
    cur = next;
  } while (cur != start && static_cast<int>(seq.size()) <= k);
  if (static_cast<int>(seq.size()) != k) return std::nullopt;  // more than one cycle
  return Hole{canonical_cycle(seq)};
}

inline std::optional<Hole> hole_from_vertices(const Graph& g, const Bitset& vertices) {
  return hole_from_vertices(g, vertices.to_vector());
}

}  // namespace evenhole
