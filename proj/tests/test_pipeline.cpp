#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "evenhole/generators.hpp"
#include "evenhole/pipeline.hpp"
#include "test_util.hpp"

using namespace evenhole;

TEST(MakeProvider, TrivialYieldsWholeVertexSet) {
  auto p = make_provider("trivial");
  Graph g = testutil::cycle(5);
  auto subsets = p->subsets(g);
  ASSERT_EQ(subsets.size(), 1u);
  EXPECT_EQ(subsets[0], (std::vector<int>{0, 1, 2, 3, 4}));
}

TEST(MakeProvider, SubsetsCountsAndGuards) {
  auto p = make_provider("subsets:5");
  Graph g = testutil::cycle(5);
  EXPECT_EQ(p->subsets(g).size(), 6u);  // C(5,4) + C(5,5)

  Graph big = testutil::cycle(6);
  EXPECT_THROW(p->subsets(big), std::invalid_argument);
  EXPECT_THROW(make_provider("subsets:19"), std::invalid_argument);
  EXPECT_THROW(make_provider("bogus"), std::invalid_argument);
}

TEST(MakeProvider, FileSubsets) {
  std::string path = testing::TempDir() + "/provider_subsets.txt";
  {
    std::ofstream out(path);
    out << "c comment line\n\n1 2 3 4\n";
  }
  auto p = make_provider("file:" + path);
  Graph g = testutil::cycle(4);
  auto subsets = p->subsets(g);
  ASSERT_EQ(subsets.size(), 1u);
  EXPECT_EQ(subsets[0], (std::vector<int>{0, 1, 2, 3}));

  Graph small = Graph::from_edges(3, {{0, 1}});
  EXPECT_THROW(p->subsets(small), std::invalid_argument);  // id out of range
  EXPECT_THROW(make_provider("file:/nonexistent/path"), std::invalid_argument);
  std::remove(path.c_str());
}

TEST(Pipeline, NoEvenHole) {
  TrivialProvider provider;
  Verdict v = shortest_even_hole(testutil::cycle(5), provider);
  EXPECT_EQ(v.status, VerdictStatus::NoEvenHole);
  EXPECT_EQ(v.stage, "existence");
  EXPECT_FALSE(v.hole.has_value());
}

TEST(Pipeline, BoundedStageFindsSmallHole) {
  TrivialProvider provider;
  Verdict v = shortest_even_hole(testutil::cycle(8), provider);
  EXPECT_EQ(v.status, VerdictStatus::Found);
  EXPECT_EQ(v.stage, "bounded");
  ASSERT_TRUE(v.hole.has_value());
  EXPECT_EQ(v.hole->length(), 8);
}

TEST(Pipeline, LongPlantedInstanceResolvedByQuadSearch) {
  TrivialProvider provider;
  Graph g = testutil::planted_cycle(26, 3);
  Verdict v = shortest_even_hole(g, provider);
  EXPECT_EQ(v.status, VerdictStatus::Found);
  EXPECT_EQ(v.stage, "long");
  EXPECT_TRUE(v.long_certified);
  ASSERT_TRUE(v.hole.has_value());
  EXPECT_EQ(v.hole->length(), 26);
  ASSERT_EQ(v.subgraphs.size(), 1u);
  ASSERT_TRUE(v.subgraphs[0].quad.has_value());
  EXPECT_EQ(v.subgraphs[0].quad->length(), 26);
}

TEST(Pipeline, LongCycleResolvedByOctetSearch) {
  TrivialProvider provider;
  Verdict v = shortest_even_hole(testutil::cycle(24), provider);
  EXPECT_EQ(v.status, VerdictStatus::Found);
  ASSERT_TRUE(v.hole.has_value());
  EXPECT_EQ(v.hole->length(), 24);
  ASSERT_EQ(v.subgraphs.size(), 1u);
  ASSERT_TRUE(v.subgraphs[0].octet.has_value());
}

TEST(Pipeline, SubsetsProviderOnSmallGraph) {
  auto provider = make_provider("subsets:10");
  Graph g = testutil::cycle(8);
  Verdict v = shortest_even_hole(g, *provider);
  EXPECT_EQ(v.status, VerdictStatus::Found);
  EXPECT_EQ(v.hole->length(), 8);  // resolved at the bounded stage
}

TEST(Pipeline, LowBoundStillCertifiesLongBeforeStageThree) {
  // with a bound below the long threshold, a hole of length in (bound, 22]
  // must still be found rather than treated as a long-graph case
  TrivialProvider provider;
  Verdict v = shortest_even_hole(testutil::cycle(16), provider, /*bound=*/8);
  EXPECT_EQ(v.status, VerdictStatus::Found);
  EXPECT_EQ(v.stage, "bounded");
  EXPECT_EQ(v.hole->length(), 16);
}

TEST(Pipeline, DeterministicAcrossThreadCounts) {
  TrivialProvider provider;
  Graph g = testutil::planted_cycle(26, 3);
  Verdict v1 = shortest_even_hole(g, provider, kLongThreshold, 1);
  Verdict v4 = shortest_even_hole(g, provider, kLongThreshold, 4);
  EXPECT_EQ(v1.status, v4.status);
  EXPECT_EQ(*v1.hole, *v4.hole);
  EXPECT_EQ(v1.subgraphs.size(), v4.subgraphs.size());
}

TEST(Pipeline, MatchesOracleOnMixedSmallCorpus) {
  TrivialProvider provider;
  GenSpec spec;
  spec.model = GenSpec::Model::Er;
  spec.n = 10;
  spec.p_num = 3;
  spec.p_den = 10;
  for (uint64_t seed = 1; seed <= 15; ++seed) {
    spec.seed = seed;
    Graph g = generate(spec);
    Verdict v = shortest_even_hole(g, provider);
    std::optional<Hole> oracle = shortest_even_hole_brute(g);
    if (oracle) {
      ASSERT_EQ(v.status, VerdictStatus::Found) << "seed " << seed;
      EXPECT_EQ(v.hole->length(), oracle->length());
    } else {
      EXPECT_EQ(v.status, VerdictStatus::NoEvenHole);
    }
  }
}
