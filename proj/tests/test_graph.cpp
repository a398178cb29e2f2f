#include <random>

#include <gtest/gtest.h>

#include "maxstp/fixtures.hpp"
#include "maxstp/graph.hpp"
#include "oracles.hpp"

using namespace maxstp;

namespace {

// Edge id of the first edge joining u and v.
int edge_between(const Multigraph& g, int u, int v) {
  for (const Edge& e : g.edges()) {
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return e.id;
  }
  return -1;
}

}  // namespace

TEST(BuildGraph, CompleteGraphOnFour) {
  Multigraph g = build_graph(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  EXPECT_EQ(g.vertex_count(), 4u);
  EXPECT_EQ(g.edge_count(), 6u);
  EXPECT_EQ(g, fixtures::k4());
}

TEST(BuildGraph, TwoBlocksJoinedByTwoEdges) {
  Multigraph g = fixtures::fig1();
  EXPECT_EQ(g.vertex_count(), 8u);
  EXPECT_EQ(g.edge_count(), 14u);
  EXPECT_EQ(g.edge(12).u, 1);
  EXPECT_EQ(g.edge(12).v, 5);
}

TEST(BuildGraph, RejectsLoops) { EXPECT_THROW(build_graph(3, {{1, 2}, {3, 3}}), InputError); }

TEST(BuildGraph, RejectsDanglingEndpointAndDuplicateIds) {
  EXPECT_THROW(build_graph(3, {{1, 4}}), InputError);
  EXPECT_THROW(Multigraph({1, 2}, {{0, 1, 2}, {0, 2, 1}}), InputError);
  EXPECT_THROW(Multigraph({1, 1, 2}, {}), InputError);
}

TEST(BuildGraph, NormalizesEndpointOrder) {
  Multigraph g({1, 2}, {{7, 2, 1}});
  EXPECT_EQ(g.edge(7).u, 1);
  EXPECT_EQ(g.edge(7).v, 2);
}

TEST(BuildGraph, ParallelEdgesKeepDistinctIds) {
  Multigraph g = fixtures::treepar_path(3, 2);
  EXPECT_EQ(g.edge_ids(), (IdSet{0, 1, 2}));
}

TEST(Components, SingleComponent) {
  auto comps = connected_components(fixtures::fig1());
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].size(), 8u);
}

TEST(Components, DeletingTheJoinSplitsTheBlocks) {
  Multigraph g = fixtures::fig1().without_edges(IdSet{12, 13});
  EXPECT_EQ(connected_components(g), (std::vector<IdSet>{{1, 2, 3, 4}, {5, 6, 7, 8}}));
}

TEST(Components, EdgelessGraph) {
  Multigraph g = build_graph(3, {});
  EXPECT_EQ(connected_components(g), (std::vector<IdSet>{{1}, {2}, {3}}));
  EXPECT_FALSE(is_connected(g));
}

TEST(Contract, TwoBlocksBecomeOneEdge) {
  Multigraph c = contract_parts(fixtures::fig1(), {{{1, 2, 3, 4}, {5, 6, 7, 8}}});
  EXPECT_EQ(c.vertex_count(), 2u);
  EXPECT_EQ(c.edge_count(), 1u);
}

TEST(Contract, SingletonsGiveBackK4) {
  Multigraph c = contract_parts(fixtures::k4(), {{{1}, {2}, {3}, {4}}});
  EXPECT_EQ(c, fixtures::k4());
}

TEST(Contract, FourBlocksOfFig4) {
  Multigraph c = contract_parts(fixtures::fig4(), {{{1, 2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12}, {13, 14, 15, 16}}});
  EXPECT_EQ(c.vertex_count(), 4u);
  ASSERT_EQ(c.edge_count(), 4u);
  // Representatives: a=1, b=5, c=9, d=13.
  EXPECT_GE(edge_between(c, 1, 5), 0);
  EXPECT_GE(edge_between(c, 5, 9), 0);
  EXPECT_GE(edge_between(c, 1, 13), 0);
  EXPECT_GE(edge_between(c, 9, 13), 0);
}

TEST(Contract, RejectsBadPartitions) {
  EXPECT_THROW(contract_parts(fixtures::k4(), {{{1, 2}, {2, 3, 4}}}), InputError);
  EXPECT_THROW(contract_parts(fixtures::k4(), {{{1, 2}, {3}}}), InputError);
  EXPECT_THROW(contract_parts(fixtures::k4(), {{{1, 2, 3, 4}, {}}}), InputError);
}

TEST(Cut, JoinOfFig1) {
  EdgeCut c = cut_of_bipartition(fixtures::fig1(), IdSet{1, 2, 3, 4});
  EXPECT_EQ(c.cut_edges, (IdSet{12, 13}));
  EXPECT_EQ(c.size(), 2u);
}

TEST(Cut, VertexDegreeInK4) { EXPECT_EQ(cut_of_bipartition(fixtures::k4(), IdSet{1}).size(), 3u); }

TEST(Cut, SideHoldingSmallestVertexComesFirst) {
  EdgeCut c = cut_of_bipartition(fixtures::k4(), IdSet{2, 3});
  EXPECT_EQ(c.side_a, (IdSet{1, 4}));
  EXPECT_EQ(c.side_b, (IdSet{2, 3}));
}

TEST(Cut, BlockAOfFig3l) { EXPECT_EQ(cut_of_bipartition(fixtures::fig3l(), IdSet{1, 2, 3, 4}).size(), 2u); }

TEST(Cut, RejectsTrivialSides) {
  EXPECT_THROW(cut_of_bipartition(fixtures::k4(), IdSet{}), InputError);
  EXPECT_THROW(cut_of_bipartition(fixtures::k4(), IdSet{1, 2, 3, 4}), InputError);
  EXPECT_THROW(cut_of_bipartition(fixtures::k4(), IdSet{9}), InputError);
}

TEST(SpanningTree, PathInK4) {
  Multigraph g = fixtures::k4();
  IdSet path{edge_between(g, 1, 2), edge_between(g, 2, 3), edge_between(g, 3, 4)};
  EXPECT_TRUE(is_spanning_tree(g, path));
}

TEST(SpanningTree, TriangleIsNot) {
  Multigraph g = fixtures::k4();
  EXPECT_FALSE(is_spanning_tree(g, IdSet{edge_between(g, 1, 2), edge_between(g, 2, 3), edge_between(g, 1, 3)}));
}

TEST(SpanningTree, AcrossTheJoin) {
  Multigraph g = fixtures::fig1();
  // Star at 1 in block a, star at 5 in block b, and the join edge (1,5).
  IdSet t{edge_between(g, 1, 2), edge_between(g, 1, 3), edge_between(g, 1, 4), edge_between(g, 5, 6),
          edge_between(g, 5, 7), edge_between(g, 5, 8), edge_between(g, 1, 5)};
  EXPECT_TRUE(is_spanning_tree(g, t));
  EXPECT_FALSE(is_spanning_tree(g, IdSet{0, 0, 1, 2, 6, 7, 12}));
}

TEST(GraphProperties, CutEdgesDisconnectWhenDeleted) {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    Multigraph g = oracle::random_connected_multigraph(rng, 8, 16);
    const int n = static_cast<int>(g.vertex_count());
    std::uniform_int_distribution<std::uint32_t> mask_dist(1, (1u << n) - 2);
    std::uint32_t mask = mask_dist(rng);
    IdSet side = oracle::subset_of(IdSet(g.vertices().begin(), g.vertices().end()), mask);
    EdgeCut c = cut_of_bipartition(g, side);
    EXPECT_GT(component_count(g.without_edges(c.cut_edges)), component_count(g));
  }
}

TEST(GraphProperties, ContractionIsSimpleAndSized) {
  std::mt19937 rng(12);
  for (int iter = 0; iter < 200; ++iter) {
    Multigraph g = oracle::random_connected_multigraph(rng, 8, 16);
    std::vector<IdSet> parts(3);
    for (int v : g.vertices()) parts[std::uniform_int_distribution<int>(0, 2)(rng)].push_back(v);
    std::erase_if(parts, [](const IdSet& p) { return p.empty(); });
    Multigraph c = contract_parts(g, {parts});
    EXPECT_EQ(c.vertex_count(), parts.size());
    std::set<std::pair<int, int>> pairs;
    for (const Edge& e : c.edges()) {
      EXPECT_NE(e.u, e.v);
      EXPECT_TRUE(pairs.insert({e.u, e.v}).second);
    }
  }
}

TEST(GraphProperties, ComponentsPartitionAndIgnoreEdgeOrder) {
  std::mt19937 rng(13);
  for (int iter = 0; iter < 200; ++iter) {
    Multigraph g = oracle::random_connected_multigraph(rng, 8, 16);
    IdSet ids = g.edge_ids();
    std::shuffle(ids.begin(), ids.end(), rng);
    ids.resize(ids.size() / 2);
    Multigraph h = g.spanning_subgraph(ids);
    auto comps = connected_components(h);
    EXPECT_NO_THROW(validate_partition(h, {comps}));
    std::vector<Edge> reversed(h.edges().begin(), h.edges().end());
    std::reverse(reversed.begin(), reversed.end());
    Multigraph r(IdSet(h.vertices().begin(), h.vertices().end()), reversed);
    EXPECT_EQ(connected_components(r), comps);
  }
}
