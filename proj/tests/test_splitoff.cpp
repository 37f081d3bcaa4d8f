#include <gtest/gtest.h>

#include "support.hpp"

using namespace hsplit;
using namespace hsplit::testing;

TEST(SplitOff, StarExample) {
  auto g = parse_hypergraph("vertices: s x y\nedge: 2 s x\nedge: 2 s y\n");
  auto r = complete_h_splitting_off(g, 0);
  EXPECT_EQ(r.graph.edges(), (EdgeMap{{VertexSet{1, 2}, 2}}));
  ASSERT_EQ(r.script.ops.size(), 2u);
  EXPECT_EQ(r.script.ops[0].kind, SplitOp::Kind::hmerge);
  EXPECT_EQ(r.script.ops[0].e, (VertexSet{0, 1}));
  EXPECT_EQ(r.script.ops[0].f, (VertexSet{0, 2}));
  EXPECT_EQ(r.script.ops[0].alpha, 2);
  EXPECT_EQ(r.script.ops[1].kind, SplitOp::Kind::htrim);
  EXPECT_EQ(r.script.ops[1].e, (VertexSet{0, 1, 2}));
  EXPECT_EQ(r.script.ops[1].alpha, 2);
  EXPECT_EQ(r.extra_edges, -1);
  EXPECT_EQ(script_to_G_star(g, r.script), r.graph);
  EXPECT_TRUE(verify_local_connectivity(g, r.graph, 0).ok);
}

TEST(SplitOff, ThreeLeafExample) {
  auto g = parse_hypergraph("vertices: s a b c\nedge: 1 s a\nedge: 1 s b\nedge: 1 s c\n");
  auto r = complete_h_splitting_off(g, 0);
  EXPECT_EQ(r.graph.edges(), (EdgeMap{{VertexSet{1, 2, 3}, 1}}));
  ASSERT_EQ(r.script.ops.size(), 3u);
  EXPECT_EQ(r.script.ops[0].kind, SplitOp::Kind::hmerge);
  EXPECT_EQ(r.script.ops[1].kind, SplitOp::Kind::hmerge);
  EXPECT_EQ(r.script.ops[2].kind, SplitOp::Kind::htrim);
  EXPECT_EQ(script_to_G_star(g, r.script), r.graph);
  EXPECT_TRUE(verify_local_connectivity(g, r.graph, 0, true).ok);
}

TEST(SplitOff, IsolatedVertexIsANoOp) {
  auto g = parse_hypergraph("vertices: s a b\nedge: 3 a b\nedge: 2 s\n");
  auto r = complete_h_splitting_off(g, 0);
  EXPECT_EQ(r.graph, g);
  EXPECT_TRUE(r.script.ops.empty());
  EXPECT_EQ(r.extra_edges, 0);
  EXPECT_THROW(complete_h_splitting_off(g, 3), InputError);
}

TEST(SplitOff, SingletonAtSIsKept) {
  auto g = parse_hypergraph("vertices: s x y\nedge: 2 s x\nedge: 2 s y\nedge: 4 s\n");
  auto r = complete_h_splitting_off(g, 0);
  EXPECT_EQ(r.graph.weight({0}), 4);
  EXPECT_EQ(script_to_G_star(g, r.script), r.graph);
  EXPECT_TRUE(verify_local_connectivity(g, r.graph, 0).ok);
}

TEST(SplitOff, ReplayErrors) {
  auto g = parse_hypergraph("vertices: s x a b\nedge: 1 s x a\nedge: 1 s x b\n");
  SplitOffScript bad{0, {{SplitOp::Kind::hmerge, {0, 1, 2}, {0, 1, 3}, 1}}};
  try {
    script_to_G_star(g, bad);
    FAIL();
  } catch (const ReplayError& ex) {
    EXPECT_NE(std::string(ex.what()).find("step 1"), std::string::npos);
  }
  EXPECT_EQ(script_to_G_star(g, SplitOffScript{0, {}}), g);
  EXPECT_THROW(script_to_G_star(g, SplitOffScript{9, {}}), ReplayError);
}

TEST(SplitOff, VerifierFailures) {
  auto g = parse_hypergraph("vertices: s x y\nedge: 2 s x\nedge: 2 s y\n");
  auto low = g.with_edges({{VertexSet{1, 2}, 1}});
  auto r = verify_local_connectivity(g, low, 0);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.failure, "lambda(x,y) is 1, expected 2");
  auto r2 = verify_local_connectivity(g, g, 0);
  EXPECT_FALSE(r2.ok);
  EXPECT_NE(r2.failure.find("not isolated"), std::string::npos);
  auto other = parse_hypergraph("vertices: s x z\n");
  EXPECT_THROW(verify_local_connectivity(g, other, 0), InputError);
}

TEST(SplitOffProperty, RandomInstancesPreserveLocalConnectivity) {
  Rng rng(51);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = random_hypergraph(rng, {2, 9, 0, 15, 5, 5, 10, 20});
    Vertex s = static_cast<Vertex>(uniform(rng, 0, static_cast<int>(g.num_vertices()) - 1));
    auto r = complete_h_splitting_off(g, s);
    auto rep = verify_local_connectivity(g, r.graph, s, true);
    ASSERT_TRUE(rep.ok) << rep.failure;
    ASSERT_EQ(script_to_G_star(g, r.script), r.graph);
    ASSERT_LE(r.extra_edges, 10 * static_cast<long long>(g.num_vertices()) - 2);
    for (Vertex v : g.vertices().without(s)) ASSERT_EQ(degree(r.graph, v), degree(g, v));
    for (const auto& op : r.script.ops)
      if (op.kind == SplitOp::Kind::hmerge) { ASSERT_EQ(op.e & op.f, VertexSet{s}); }
  }
}

TEST(SplitOffProperty, SequentialSplittingPreservesTerminalConnectivity) {
  Rng rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = random_hypergraph(rng, {3, 8, 2, 14, 3, 4, 10, 30});
    int n = static_cast<int>(g.num_vertices());
    auto steiner = random_subset(rng, n, uniform(rng, 1, n - 2)).data();
    std::shuffle(steiner.begin(), steiner.end(), rng);
    auto before = all_pairs_lambda(g);
    Hypergraph cur = g;
    for (Vertex u : steiner) cur = complete_h_splitting_off(cur, u).graph;
    VertexSet terminals = g.vertices() - VertexSet(steiner);
    for (Vertex u : terminals)
      for (Vertex v : terminals)
        if (u < v) { ASSERT_EQ(brute_lambda(cur, u, v), before[u][v]); }
    for (Vertex u : steiner) ASSERT_EQ(cut_value(cur, {u}), 0);
  }
}
