#pragma once

#include <array>
#include <atomic>
#include <climits>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "graph.hpp"
#include "hole.hpp"
#include "parallel.hpp"
#include "path.hpp"

namespace evenhole {

/// Eight anchors on a hole C splitting it into edge-disjoint arcs of length
/// a or a+1, where |C| = 8a + b with b in [0,7]. Arc i runs from anchors[i]
/// to anchors[(i+1) % 8]; adjacent arc lengths sum to at most 2a + ceil(b/4).
struct EightSplit {
  std::array<int, 8> anchors;
  std::array<int, 8> arc_lengths;
  int a = 0;
  int b = 0;
};

/// Splits an even hole of length >= 24. The b longer arcs sit at maximally
/// spread cyclic positions floor(8k/b), which keeps every adjacent-arc sum
/// within the bound for each b in [0,7].
inline EightSplit eight_split(const Hole& C) {
  int len = C.length();
  if (len % 2 != 0) throw std::invalid_argument("hole length must be even");
  if (len < 24) throw std::invalid_argument("hole must have at least 24 vertices");
  EightSplit s;
  s.a = len / 8;
  s.b = len % 8;
  std::array<bool, 8> is_long{};
  for (int k = 0; k < s.b; ++k) is_long[8 * k / s.b] = true;
  int pos = 0;
  for (int i = 0; i < 8; ++i) {
    s.anchors[i] = C.cycle[pos];
    s.arc_lengths[i] = s.a + (is_long[i] ? 1 : 0);
    pos += s.arc_lengths[i];
  }
  return s;
}

/// Per-pair path data derived from a PathTable, answering two queries in a
/// handful of word operations:
///   is_path(u, v, w):          is G[P(u,v) ∪ P(v,w)] a path?
///   disconnected(u, v, x, y):  are P(u,v) and P(x,y) vertex-disjoint with
///                              no edges between them?
/// Both report false when a required pair is disconnected in g.
class PairQuery {
 public:
  PairQuery(const Graph& g, const PathTable& t) : g_(&g), t_(&t), n_(g.vertex_count()) {
    path_bits_.resize(size_t(n_) * n_);
    closed_reach_.resize(size_t(n_) * n_);
    reach_excl_.resize(size_t(n_) * n_);
    for (int u = 0; u < n_; ++u) {
      for (int v = u; v < n_; ++v) {
        if (!t.connected(u, v)) continue;
        const Path p = *t.path(u, v);
        Bitset bits(n_);
        Bitset closed(n_);
        for (int z : p.vertices) {
          bits.set(z);
          closed.set(z);
          or_neighbors(closed, z);
        }
        path_bits_[idx(u, v)] = bits;
        path_bits_[idx(v, u)] = bits;
        closed_reach_[idx(u, v)] = closed;
        closed_reach_[idx(v, u)] = closed;
        reach_excl_[idx(u, v)] = reach_from(p.vertices, u);
        reach_excl_[idx(v, u)] = reach_from(p.vertices, v);
      }
    }
  }

  bool pair_connected(int u, int v) const { return t_->connected(u, v); }

  /// Vertex set of the canonical path P(u,v).
  const Bitset& path_bits(int u, int v) const { return path_bits_[idx(u, v)]; }

  /// N[V(P(u,v))].
  const Bitset& closed_reach(int u, int v) const { return closed_reach_[idx(u, v)]; }

  /// Union of N(z) over z in V(P(s,t)) \ {s}; always contains s itself.
  const Bitset& reach_excluding_start(int s, int t) const { return reach_excl_[idx(s, t)]; }

  // The union of two shortest paths sharing endpoint v is a path in exactly
  // three shapes: one path contains the other, or they meet only at v with
  // no cross edges. Any other overlap yields a second v-to-p route or a
  // branch vertex, so the answer is a handful of word operations.
  bool is_path(int u, int v, int w) const {
    if (!pair_connected(u, v) || !pair_connected(v, w)) return false;
    if (u == v || v == w || u == w) return true;  // the union is a single stored path
    const Bitset& b1 = path_bits(u, v);
    const Bitset& b2 = path_bits(v, w);
    Bitset inter = b1 & b2;
    if (inter == b1 || inter == b2) return true;
    if (!b1.intersection_is_single(b2, v)) return false;
    return reach_excluding_start(v, w).intersection_is_single(b1, v);
  }

  bool disconnected(int u, int v, int x, int y) const {
    if (!pair_connected(u, v) || !pair_connected(x, y)) return false;
    return !closed_reach(u, v).intersects(path_bits(x, y));
  }

 private:
  size_t idx(int u, int v) const { return size_t(u) * n_ + v; }

  void or_neighbors(Bitset& out, int z) const {
    if (g_->has_adjacency_bits()) {
      out |= g_->adjacency_bits(z);
    } else {
      for (int w : g_->neighbors(z)) out.set(w);
    }
  }

  Bitset reach_from(const std::vector<int>& vertices, int excluded) const {
    Bitset out(n_);
    for (int z : vertices) {
      if (z != excluded) or_neighbors(out, z);
    }
    return out;
  }

  const Graph* g_;
  const PathTable* t_;
  int n_;
  std::vector<Bitset> path_bits_;
  std::vector<Bitset> closed_reach_;
  std::vector<Bitset> reach_excl_;
};

inline PairQuery build_pair_query(const Graph& g, const PathTable& t) { return PairQuery(g, t); }

namespace detail {

// Backtracking over anchor tuples (v0,...,v7): v0 is the tuple minimum and
// v1 < v7. Every placed arc is a canonical shortest path of length >= 3, and
// each prefix union must stay an induced path — true of any arc run of a
// hole, so no tuple that assembles a hole is lost. Partial sums are bounded
// by the best even hole found so far (three edges per unplaced arc).
class OctetSearcher {
 public:
  OctetSearcher(const Graph& g, const PathTable& t, const PairQuery& pq)
      : g_(g), t_(t), pq_(pq), n_(g.vertex_count()) {}

  std::optional<Hole> run(int threads) {
    parallel_branches(n_, threads, [&](int v0) { branch(v0); });
    return best_;
  }

 private:
  struct Frame {
    Bitset used;   // union of the placed arcs
    Bitset reach;  // N[used]
    int sum = 0;   // placed arc length total
  };

  void branch(int v0) {
    Frame f{Bitset(n_), Bitset(n_), 0};
    f.used.set(v0);
    f.reach.set(v0);
    for (int w : g_.neighbors(v0)) f.reach.set(w);
    std::array<int, 8> anchors{};
    anchors[0] = v0;
    std::optional<Bitset> seen;
    extend(1, anchors, f, seen);
  }

  void extend(int level, std::array<int, 8>& anchors, const Frame& f,
              std::optional<Bitset>& seen) {
    if (level == 8) {
      close(anchors, f, seen);
      return;
    }
    int v0 = anchors[0];
    int last = anchors[level - 1];
    int arcs_left_after = 8 - level;
    int budget = best_len_.load(std::memory_order_relaxed);

    int floor_id = level == 7 ? anchors[1] : v0;  // v1 < v7 kills reflections
    Bitset avail = Bitset::above(n_, floor_id);
    avail.and_not(f.reach);

    avail.for_each([&](int w) {
      int len = t_.dist(last, w);
      if (len < 3) return;
      if (f.sum + len + 3 * arcs_left_after > budget) return;
      const Bitset& arc = pq_.path_bits(last, w);
      if (!arc.intersection_is_single(f.used, last)) return;
      if (!pq_.reach_excluding_start(last, w).intersection_is_single(f.used, last)) return;
      Frame next{f.used | arc, f.reach | pq_.closed_reach(last, w), f.sum + len};
      anchors[level] = w;
      extend(level + 1, anchors, next, seen);
    });
  }

  void close(const std::array<int, 8>& anchors, const Frame& f, std::optional<Bitset>& seen) {
    int v0 = anchors[0], a7 = anchors[7];
    int len = t_.dist(a7, v0);
    if (len < 3) return;
    int total = f.sum + len;
    if (total % 2 != 0) return;
    if (total > best_len_.load(std::memory_order_relaxed)) return;
    const Bitset& arc = pq_.path_bits(a7, v0);
    if (!arc.intersection_is_pair(f.used, a7, v0)) return;
    Bitset full = f.used | arc;
    if (seen && *seen == full) return;  // same vertex set as the last completion
    seen = full;
    std::optional<Hole> hole = hole_from_vertices(g_, full);
    if (!hole || !hole->even()) return;
    std::lock_guard<std::mutex> lock(best_mutex_);
    if (!best_ || *hole < *best_) {
      best_ = hole;
      best_len_.store(best_->length(), std::memory_order_relaxed);
    }
  }

  const Graph& g_;
  const PathTable& t_;
  const PairQuery& pq_;
  int n_;
  std::atomic<int> best_len_{INT_MAX};
  std::mutex best_mutex_;
  std::optional<Hole> best_;
};

}  // namespace detail

/// Eight-anchor search over a long graph: assembles candidate holes from
/// eight canonical shortest paths, each of length >= 3, and returns the
/// minimum verified even hole or absent. Callers certify the graph is long
/// (no even hole on at most 22 vertices); passing false is rejected. Any
/// result is an even hole of g; when g has a good shortest even hole, the
/// result is a shortest even hole of g.
inline std::optional<Hole> octet_search(const Graph& g, bool long_certified, int threads = 1) {
  if (!long_certified) throw std::invalid_argument("octet search requires a long-graph certificate");
  if (g.vertex_count() < 24) return std::nullopt;  // no room for an even hole of length >= 24
  PathTable t = apsp(g);
  PairQuery pq(g, t);
  detail::OctetSearcher searcher(g, t, pq);
  return searcher.run(threads);
}

}  // namespace evenhole
