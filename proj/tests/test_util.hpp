#pragma once

#include <utility>
#include <vector>

#include "evenhole/graph.hpp"
#include "evenhole/hole.hpp"

namespace testutil {

using evenhole::Graph;

inline Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

inline Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

// C_k plus one fresh vertex adjacent to hole vertices at and at+d (mod k).
inline Graph planted_cycle(int k, int d, int at = 0) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  edges.emplace_back(at, k);
  edges.emplace_back((at + d) % k, k);
  return Graph::from_edges(k + 1, edges);
}

inline Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return Graph::from_edges(10, edges);
}

inline evenhole::Hole hole_of_cycle(int n) {
  std::vector<int> seq(n);
  for (int i = 0; i < n; ++i) seq[i] = i;
  return evenhole::Hole{seq};
}

}  // namespace testutil
