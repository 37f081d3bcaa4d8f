#include <gtest/gtest.h>

#include "support.hpp"

using namespace hsplit;
using namespace hsplit::testing;

namespace {

CoverInstance star2() {
  return splitting_instance(parse_hypergraph("vertices: s x y\nedge: 2 s x\nedge: 2 s y\n"), 0);
}
CoverInstance three_leaf() {
  return splitting_instance(parse_hypergraph("vertices: s a b c\nedge: 1 s a\nedge: 1 s b\nedge: 1 s c\n"), 0);
}

}  // namespace

TEST(Preprocess, TightStarIsUnchanged) {
  auto c = star2();
  auto pre = preprocess(c.h, c.p);
  EXPECT_EQ(pre.h, c.h);
  EXPECT_TRUE(pre.carved.empty());
  EXPECT_TRUE(pre.z.empty());
}

TEST(Preprocess, ZeroRequirementCarvesEverything) {
  auto p = std::make_shared<RequirementOracle>(2, VertexSet{0, 1}, EdgeMap{}, RequirementFunction(2));
  EdgeMap h{{VertexSet{0, 1}, 5}};
  MergeTrace tr;
  auto pre = preprocess(h, p, &tr);
  EXPECT_TRUE(pre.h.empty());
  ASSERT_EQ(pre.carved.size(), 1u);
  EXPECT_EQ(pre.carved[0].first, (VertexSet{0, 1}));
  EXPECT_EQ(pre.carved[0].second, 5);
  EXPECT_EQ(pre.z, (VertexSet{0, 1}));
  ASSERT_EQ(tr.entries.size(), 1u);
  EXPECT_EQ(tr.entries[0].kind, TraceEntry::Kind::reduce);
}

TEST(Preprocess, LowerBoundInstanceSurvivesIntact) {
  auto h = appendix_a_instance(6);
  auto pre = preprocess(h.edges(), appendix_a_oracle(6, 0));
  EXPECT_EQ(pre.h, h.edges());
  EXPECT_TRUE(pre.carved.empty());
  EXPECT_TRUE(pre.z.empty());
}

TEST(Preprocess, WeakCoverViolationIsReported) {
  auto c = star2();
  EdgeMap thin{{VertexSet{1}, 1}, {VertexSet{2}, 2}};
  EXPECT_THROW(preprocess(thin, c.p), ContractViolation);
}

TEST(Cover, StarTrace) {
  auto c = star2();
  auto res = weak_to_strong_cover(c.h, c.p);
  EXPECT_EQ(res.edges, (EdgeMap{{VertexSet{1, 2}, 2}}));
  ASSERT_EQ(res.steps.size(), 1u);
  const auto& st = res.steps[0];
  EXPECT_EQ(st.e, VertexSet{1});
  EXPECT_EQ(st.f, VertexSet{2});
  EXPECT_EQ(st.alpha_m, 2);
  EXPECT_EQ(st.beta_m, ExtInt(4));
  EXPECT_EQ(st.alpha_r, 2);
  EXPECT_EQ(res.depth, 2u);
  EXPECT_TRUE(verify_cover_result(c.h, c.ground, c.value, res).ok);
}

TEST(Cover, ThreeLeafTrace) {
  auto c = three_leaf();
  auto res = strong_cover(c.h, c.p);
  EXPECT_EQ(res.edges, (EdgeMap{{VertexSet{1, 2, 3}, 1}}));
  ASSERT_EQ(res.steps.size(), 2u);
  EXPECT_EQ(res.steps[0].alpha_r, 0);
  EXPECT_EQ(res.steps[1].alpha_r, 1);
  EXPECT_TRUE(verify_cover_result(c.h, c.ground, c.value, res).ok);
}

// The second step attains its merge bound yet reduces a positive amount:
// f = {c} is used up by the merge, so nothing forces e ∪ f to stay loose.
TEST(Cover, ZeroReduceIsNotImpliedByAttainedMergeBound) {
  auto res = strong_cover(three_leaf().h, three_leaf().p);
  const auto& st = res.steps[1];
  EXPECT_EQ(st.e, (VertexSet{1, 2}));
  EXPECT_EQ(st.f, VertexSet{3});
  EXPECT_EQ(ExtInt(st.alpha_m), st.beta_m);
  EXPECT_EQ(st.alpha_r, 1);
}

TEST(Cover, LowerBoundInstanceUniqueOutput) {
  auto h = appendix_a_instance(4);
  auto res = strong_cover(h.edges(), appendix_a_oracle(4, 0));
  EdgeMap want{{VertexSet{0, 1, 2}, 1}, {VertexSet{0, 1, 3}, 1}, {VertexSet{0, 2, 3}, 1}};
  EXPECT_EQ(res.edges, want);
  AppendixAOracle p(4, 0);
  SetFn pv = [&](const VertexSet& x) { return p.value(x); };
  EXPECT_TRUE(verify_cover_result(h.edges(), h.vertices(), pv, res).ok);
}

TEST(Cover, EmptyInstance) {
  auto p = std::make_shared<RequirementOracle>(2, VertexSet{0, 1}, EdgeMap{}, RequirementFunction(2));
  auto res = strong_cover({}, p);
  EXPECT_TRUE(res.edges.empty());
  EXPECT_TRUE(res.steps.empty());
}

TEST(Cover, UncoveredVertexIsAContractViolation) {
  auto c = star2();
  EXPECT_THROW(weak_to_strong_cover(EdgeMap{{VertexSet{1}, 2}}, c.p), ContractViolation);
}

TEST(VerifyCover, TamperedTraceIsReported) {
  auto c = three_leaf();
  auto res = strong_cover(c.h, c.p);
  auto bad = res;
  for (auto it = bad.trace.entries.begin(); it != bad.trace.entries.end(); ++it)
    if (it->kind == TraceEntry::Kind::merge) {
      bad.trace.entries.erase(it);
      break;
    }
  auto r = verify_cover_result(c.h, c.ground, c.value, bad);
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.failure.find("replay"), std::string::npos);
}

TEST(VerifyCover, WeakenedOutputFailsStrongCover) {
  auto c = star2();
  auto res = weak_to_strong_cover(c.h, c.p);
  res.edges[VertexSet{1, 2}] = 1;
  auto r = verify_cover_result(c.h, c.ground, c.value, res);
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.failure.find("strong cover"), std::string::npos);
}

TEST(VerifyCover, SizeBoundFailure) {
  auto h = appendix_a_instance(6);
  auto res = strong_cover(h.edges(), appendix_a_oracle(6, 0));
  AppendixAOracle p(6, 0);
  SetFn pv = [&](const VertexSet& x) { return p.value(x); };
  ASSERT_TRUE(verify_cover_result(h.edges(), h.vertices(), pv, res).ok);
  // Ten merged hyperedges against a claimed core of one vertex, no edges.
  res.core_edges = 0;
  res.core_vertices = 1;
  auto r = verify_cover_result(h.edges(), h.vertices(), pv, res);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.failure, "size bound exceeded");
}

TEST(Laminar, ProjectionExamples) {
  std::vector<VertexSet> l{{0}, {0, 1}, {2}};
  EXPECT_EQ(project_laminar(l, {2}), (std::vector<VertexSet>{{0}, {0, 1}}));
  EXPECT_EQ(project_laminar(l, {}), l);
  std::vector<VertexSet> chain{{0}, {0, 1}, {0, 1, 2}, {0, 1, 2, 3}};
  auto p = project_laminar(chain, {1, 2, 3});
  EXPECT_EQ(p, (std::vector<VertexSet>{{0}}));
  EXPECT_LE(chain.size(), p.size() + 3 * 3);
  EXPECT_THROW(project_laminar({{0, 1}, {1, 2}}, {}), InputError);
}

TEST(LaminarProperty, ProjectionStaysLaminarAndLosesAtMostThreePerVertex) {
  Rng rng(41);
  for (int trial = 0; trial < 2000; ++trial) {
    int n = uniform(rng, 1, 16);
    auto l = random_laminar(rng, n);
    ASSERT_TRUE(is_laminar(l));
    auto z = random_any_subset(rng, VertexSet::range(n));
    auto p = project_laminar(l, z);
    ASSERT_TRUE(is_laminar(p));
    ASSERT_LE(l.size(), p.size() + 3 * z.size());
  }
}

TEST(CoverProperty, RandomInstancesGiveVerifiedStrongCovers) {
  Rng rng(42);
  int steps = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto c = random_cover_instance(rng, uniform(rng, 2, 8), uniform(rng, 1, 8), 4, 4);
    ASSERT_TRUE(is_weak_cover(c));
    CoverOptions opt;
    opt.check_family = true;
    auto res = strong_cover(c.h, c.p, opt);
    auto r = verify_cover_result(c.h, c.ground, c.value, res);
    ASSERT_TRUE(r.ok) << r.failure;
    for (const auto& st : res.steps) {
      ASSERT_GE(st.alpha_m, 1);
      ASSERT_GE(st.alpha_r, 0);
      ASSERT_GE(ExtInt(st.alpha_m), ExtInt(0));
      ASSERT_LE(ExtInt(st.alpha_m), st.beta_m);
      ++steps;
    }
  }
  EXPECT_GT(steps, 200);
}

TEST(CoverProperty, EveryLevelFamilyIsTheMaximalTightFamilyAndPersists) {
  Rng rng(43);
  int levels = 0;
  for (int trial = 0; trial < 150; ++trial) {
    auto c = trial % 2 ? random_cover_instance(rng, uniform(rng, 2, 7), uniform(rng, 1, 7), 3, 4)
                       : splitting_instance(random_hypergraph(rng, {3, 8, 1, 10, 4, 4, 10, 30}), 0);
    std::size_t n = c.g.num_vertices();
    std::vector<VertexSet> prev;
    CoverOptions opt;
    opt.on_level = [&](const SetFunctionOracle& p, const EdgeMap& h, const TightSetFamily& fam) {
      SetFn pv = explicit_fn(p);
      ASSERT_EQ(fam.sets, brute_maximal_tight(pv, p.ground(), h, n));
      for (std::size_t i = 0; i < fam.sets.size(); ++i)
        for (std::size_t j = i + 1; j < fam.sets.size(); ++j) ASSERT_FALSE(fam.sets[i].intersects(fam.sets[j]));
      for (const auto& y : prev) {
        VertexSet x = y & p.ground();
        if (!x.empty()) { ASSERT_EQ(pv(x), ExtInt(cover_of(h, x, n))); }
      }
      prev = fam.sets;
      ++levels;
    };
    auto res = strong_cover(c.h, c.p, opt);
    ASSERT_TRUE(verify_cover_result(c.h, c.ground, c.value, res).ok);
  }
  EXPECT_GT(levels, 100);
}

TEST(CoverProperty, ReplayRejectsIntersectingMerges) {
  MergeTrace t;
  t.entries.push_back({TraceEntry::Kind::merge, {0, 1}, {1, 2}, 1});
  EXPECT_THROW(replay_trace({{VertexSet{0, 1}, 1}, {VertexSet{1, 2}, 1}}, t), ReplayError);
  MergeTrace short_trace;
  EXPECT_THROW(replay_trace({{VertexSet{0}, 1}}, short_trace), ReplayError);
}
