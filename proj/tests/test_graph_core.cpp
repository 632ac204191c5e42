#include <gtest/gtest.h>

#include <algorithm>

#include "evenhole/generators.hpp"
#include "evenhole/graph.hpp"
#include "evenhole/hole.hpp"
#include "evenhole/path.hpp"
#include "test_util.hpp"

using namespace evenhole;

TEST(LoadGraph, ParsesCycleWithUnsortedEndpoints) {
  Graph g = load_graph("p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n");
  EXPECT_EQ(g.vertex_count(), 4);
  EXPECT_EQ(g.edge_count(), 4);
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(3, 0));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(LoadGraph, CommentsAndBlankLines) {
  Graph g = load_graph("c generated\nc more\np edge 2 1\n\ne 1 2\n");
  EXPECT_EQ(g.vertex_count(), 2);
  EXPECT_TRUE(g.has_edge(0, 1));
}

TEST(LoadGraph, SelfLoopReportsLine) {
  try {
    load_graph("p edge 3 1\ne 1 1\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
  }
}

TEST(LoadGraph, DuplicateEdge) {
  EXPECT_THROW(load_graph("p edge 3 2\ne 1 2\ne 1 2\n"), ParseError);
  EXPECT_THROW(load_graph("p edge 3 2\ne 1 2\ne 2 1\n"), ParseError);
}

TEST(LoadGraph, MalformedInputs) {
  EXPECT_THROW(load_graph(""), ParseError);
  EXPECT_THROW(load_graph("p edge 3\ne 1 2\n"), ParseError);
  EXPECT_THROW(load_graph("p edge 3 1\ne 1 4\n"), ParseError);   // out of range
  EXPECT_THROW(load_graph("p edge 3 2\ne 1 2\n"), ParseError);   // missing edge
  EXPECT_THROW(load_graph("p edge 3 0\ne 1 2\n"), ParseError);   // surplus edge
  EXPECT_THROW(load_graph("x 1 2\np edge 2 0\n"), ParseError);   // unknown tag
  EXPECT_THROW(load_graph("e 1 2\np edge 2 1\n"), ParseError);   // edge first
}

TEST(RenderGraph, RoundTripsRandomGraphs) {
  for (uint64_t seed : {1u, 2u, 3u, 4u, 5u, 6u, 7u, 8u}) {
    GenSpec spec;
    spec.model = GenSpec::Model::Er;
    spec.n = 11;
    spec.p_num = 2;
    spec.p_den = 5;
    spec.seed = seed;
    Graph g = generate(spec);
    EXPECT_EQ(load_graph(render_graph(g)), g) << "seed " << seed;
  }
}

TEST(RenderGraph, EmitsSortedEdges) {
  Graph g = load_graph("p edge 3 3\ne 3 1\ne 2 3\ne 1 2\n");
  EXPECT_EQ(render_graph(g), "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
}

TEST(InducedSubgraph, PairFromCycle) {
  Graph c4 = testutil::cycle(4);
  InducedSubgraph sub = induced_subgraph(c4, {0, 1});
  EXPECT_EQ(sub.graph.vertex_count(), 2);
  EXPECT_EQ(sub.graph.edge_count(), 1);
  EXPECT_EQ(sub.to_parent, (std::vector<int>{0, 1}));
  EXPECT_EQ(sub.from_parent[1], 1);
  EXPECT_EQ(sub.from_parent[2], -1);
}

TEST(InducedSubgraph, EmptyAndFull) {
  Graph c4 = testutil::cycle(4);
  EXPECT_EQ(induced_subgraph(c4, {}).graph.vertex_count(), 0);
  EXPECT_EQ(induced_subgraph(c4, {0, 1, 2, 3}).graph, c4);
  EXPECT_THROW(induced_subgraph(c4, {4}), std::out_of_range);
}

TEST(ClosedNeighborhood, Examples) {
  Graph c4 = testutil::cycle(4);
  EXPECT_EQ(closed_neighborhood(c4, {0}), (std::vector<int>{0, 1, 3}));
  EXPECT_EQ(closed_neighborhood(c4, {}), std::vector<int>{});
  EXPECT_EQ(closed_neighborhood(c4, {0, 1, 2, 3}), (std::vector<int>{0, 1, 2, 3}));
}

TEST(ClosedNeighborhood, Monotone) {
  GenSpec spec;
  spec.model = GenSpec::Model::Er;
  spec.n = 12;
  spec.p_num = 3;
  spec.p_den = 10;
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    spec.seed = seed;
    Graph g = generate(spec);
    Xorshift64Star rng(seed * 977);
    std::vector<int> small, big;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (rng.next() % 3 == 0) small.push_back(v);
    }
    big = small;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (rng.next() % 3 == 0) big.push_back(v);
    }
    std::sort(big.begin(), big.end());
    big.erase(std::unique(big.begin(), big.end()), big.end());
    std::vector<int> ns = closed_neighborhood(g, small);
    std::vector<int> nb = closed_neighborhood(g, big);
    EXPECT_TRUE(std::includes(nb.begin(), nb.end(), ns.begin(), ns.end()));
  }
}

TEST(ShortestPath, CanonicalTieBreakOnC6) {
  Graph c6 = testutil::cycle(6);
  auto p = shortest_path(c6, 0, 3);
  ASSERT_TRUE(p.has_value());
  EXPECT_EQ(p->vertices, (std::vector<int>{0, 1, 2, 3}));
  auto rev = shortest_path(c6, 3, 0);
  ASSERT_TRUE(rev.has_value());
  EXPECT_EQ(rev->vertices, (std::vector<int>{3, 2, 1, 0}));
}

TEST(ShortestPath, TrivialAndDisconnected) {
  Graph c6 = testutil::cycle(6);
  auto loop = shortest_path(c6, 2, 2);
  ASSERT_TRUE(loop.has_value());
  EXPECT_EQ(loop->length(), 0);

  Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(shortest_path(two, 0, 3).has_value());
}

TEST(Apsp, MatchesShortestPathEverywhere) {
  GenSpec spec;
  spec.model = GenSpec::Model::Er;
  spec.n = 10;
  spec.p_num = 3;
  spec.p_den = 10;
  for (uint64_t seed = 1; seed <= 6; ++seed) {
    spec.seed = seed;
    Graph g = generate(spec);
    PathTable t = apsp(g);
    for (int u = 0; u < g.vertex_count(); ++u) {
      for (int v = 0; v < g.vertex_count(); ++v) {
        auto p = shortest_path(g, u, v);
        if (!p) {
          EXPECT_EQ(t.dist(u, v), -1);
          EXPECT_FALSE(t.path(u, v).has_value());
          continue;
        }
        ASSERT_TRUE(t.path(u, v).has_value());
        EXPECT_EQ(t.dist(u, v), p->length());
        EXPECT_EQ(*t.path(u, v), *p);
        EXPECT_TRUE(is_induced_path(g, p->vertices));
      }
    }
  }
}

TEST(Apsp, CycleAndCompleteExamples) {
  PathTable c6 = apsp(testutil::cycle(6));
  EXPECT_EQ(c6.dist(0, 3), 3);
  PathTable k4 = apsp(testutil::complete(4));
  for (int u = 0; u < 4; ++u) {
    for (int v = 0; v < 4; ++v) EXPECT_EQ(k4.dist(u, v), u == v ? 0 : 1);
  }
  PathTable c8 = apsp(testutil::cycle(8));
  EXPECT_EQ(c8.path(2, 5)->reversed(), *c8.path(5, 2));
}

TEST(IsInducedPath, Examples) {
  Graph c6 = testutil::cycle(6);
  EXPECT_TRUE(is_induced_path(c6, {0, 1, 2}));
  EXPECT_FALSE(is_induced_path(c6, {0, 1, 2, 3, 4, 5}));  // 0-5 chord
  EXPECT_TRUE(is_induced_path(c6, {4}));
  EXPECT_FALSE(is_induced_path(c6, {0, 1, 0}));  // repeat
  EXPECT_FALSE(is_induced_path(c6, {0, 2}));     // not adjacent
  EXPECT_FALSE(is_induced_path(c6, {}));
  EXPECT_FALSE(is_induced_path(c6, {0, 1, 9}));  // unknown id
}

TEST(ValidateHole, ExamplesAndCanonicalForm) {
  Graph c4 = testutil::cycle(4);
  auto h = validate_hole(c4, {0, 1, 2, 3});
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(h->length(), 4);
  EXPECT_TRUE(h->even());

  Graph chorded = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  EXPECT_FALSE(validate_hole(chorded, {0, 1, 2, 3}).has_value());

  Graph tri = testutil::complete(3);
  EXPECT_FALSE(validate_hole(tri, {0, 1, 2}).has_value());
  EXPECT_FALSE(validate_hole(c4, {0, 1, 2, 7}).has_value());  // unknown id
}

TEST(ValidateHole, RotationReflectionInvariance) {
  Graph c6 = testutil::cycle(6);
  std::vector<int> base{0, 1, 2, 3, 4, 5};
  Hole expect = *validate_hole(c6, base);
  for (int r = 0; r < 6; ++r) {
    std::vector<int> rot;
    for (int i = 0; i < 6; ++i) rot.push_back(base[(i + r) % 6]);
    EXPECT_EQ(*validate_hole(c6, rot), expect);
    std::vector<int> refl(rot.rbegin(), rot.rend());
    EXPECT_EQ(*validate_hole(c6, refl), expect);
  }
  EXPECT_EQ(expect.cycle, (std::vector<int>{0, 1, 2, 3, 4, 5}));
}

TEST(HoleFromVertices, AcceptsCycleSetRejectsOthers) {
  Graph c6 = testutil::cycle(6);
  auto h = hole_from_vertices(c6, std::vector<int>{3, 0, 5, 2, 1, 4});
  ASSERT_TRUE(h.has_value());
  EXPECT_EQ(h->length(), 6);
  EXPECT_FALSE(hole_from_vertices(c6, std::vector<int>{0, 1, 2, 3}).has_value());

  // two disjoint squares: 2-regular but not a single cycle
  Graph squares = Graph::from_edges(
      8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
  EXPECT_FALSE(
      hole_from_vertices(squares, std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7}).has_value());
}
