#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "instances.hpp"
#include "meccount/constructmec.hpp"
#include "meccount/mecrules.hpp"
#include "meccount/shadow.hpp"

using namespace meccount;
using namespace meccount::testing;

namespace {

DecompositionContext p3_split() {
  return {ugraph({{0, 1}, {1, 2}}), vset({'a', 'b'}), vset({'b', 'c'}), vset({'b'}), vset({'a', 'b'}),
          vset({'b', 'c'})};
}

DecompositionContext swapped(const DecompositionContext& c) { return {c.h, c.h2, c.h1, c.i, c.s2, c.s1}; }

}  // namespace

TEST(ConstructMec, LbfsExamples) {
  auto path = ugraph({{0, 1}, {1, 2}});
  VertexOrdering t = lbfs_with_o(path, pdag({"a>b", "b-c"}));
  EXPECT_EQ(t.order, (std::vector<VertexId>{A, B, C}));
  EXPECT_EQ(t.rank(C), 3u);

  // b first would put the directed edge c -> b out of order
  VertexOrdering r = lbfs_with_o(path, pdag({"c>b", "a-b"}));
  EXPECT_EQ(r.order.front(), C);
  EXPECT_LT(r.rank(C), r.rank(B));

  auto plain = lbfs_with_o(ugraph({{0, 1}, {0, 2}, {1, 3}}), pdag({"a-b"}));
  EXPECT_EQ(plain.order, (std::vector<VertexId>{A, B, C, D}));

  VertexOrdering single = lbfs_with_o(UndirectedGraph(vset({'e'}), {}), Pdag{});
  EXPECT_EQ(single.rank(E), 1u);
  EXPECT_FALSE(single.contains(A));
  EXPECT_THROW(single.rank(A), InputError);
}

TEST(ConstructMec, LbfsGivesPeoOnChordalGraphs) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : all_connected_graphs(n)) {
      if (!is_chordal(g)) continue;
      auto tau = lbfs_with_o(g, Pdag::undirected(g));
      ASSERT_TRUE(is_perfect_elimination_ordering(g, tau));
    }
  EXPECT_FALSE(is_perfect_elimination_ordering(cycle_graph(4), {{A, B, C, D}}));
}

TEST(ConstructMec, P3Examples) {
  auto ctx = p3_split();
  Pdag m1 = pdag({"a-b"}), m2 = pdag({"b-c"});
  Pdag vee = pdag({"a>b", "c>b"});
  Pdag m = construct_mec(ctx, m1, m2, vee);
  EXPECT_EQ(m, vee);
  EXPECT_TRUE(verify_merge(m, ctx, m1, m2, vee));
  Pdag und = pdag({"a-b", "b-c"});
  EXPECT_EQ(construct_mec(ctx, m1, m2, und), und);
  EXPECT_THROW(construct_mec(ctx, pdag({"a>b"}), m2, und), PreconditionError);
  EXPECT_THROW(construct_mec(ctx, m1, m2, pdag({"a>b", "b-c"})), PreconditionError);
}

TEST(ConstructMec, IdentityMerge) {
  Rng rng(13);
  for (int k = 0; k < 40; ++k) {
    auto g = random_connected_graph(3 + k % 5, 4, rng);
    Pdag m = random_mec(g, rng);
    DecompositionContext ctx{g, g.vertices(), g.vertices(), g.vertices(), g.vertices(), g.vertices()};
    ASSERT_EQ(construct_mec(ctx, m, m, m), m);
  }
}

TEST(ConstructMec, VerifyMergeRejectsBadGraphs) {
  auto ctx = p3_split();
  Pdag m1 = pdag({"a-b"}), m2 = pdag({"b-c"});
  Pdag vee = pdag({"a>b", "c>b"});
  EXPECT_FALSE(verify_merge(pdag({"b>a", "c>b"}), ctx, m1, m2, vee));
  EXPECT_FALSE(verify_merge(pdag({"a>b", "b-c"}), ctx, m1, m2, pdag({"a>b", "b-c"})));
  EXPECT_FALSE(verify_merge(pdag({"a-b"}, {'c'}), ctx, m1, m2, pdag({"a-b"}, {'c'})));
}

TEST(ConstructMec, SideOrderDoesNotMatter) {
  for (int n = 3; n <= 5; ++n)
    for (const auto& g : all_connected_graphs(n))
      for (const auto& c : cut_instances(g)) {
        const auto& ctx = c.ctx;
        for (const auto& m : enumerate_mecs(c.g)) {
          Pdag o = induced_subgraph(m, ctx.boundary());
          Pdag m1 = project_mec(m, ctx.h1), m2 = project_mec(m, ctx.h2);
          Pdag x = construct_mec(ctx, m1, m2, o);
          ASSERT_EQ(x, m);
          ASSERT_EQ(construct_mec(swapped(ctx), m2, m1, o), x);
        }
      }
}

TEST(ConstructMec, RoundTripOnSmallGraphs) {
  for (int n = 2; n <= 4; ++n)
    for (const auto& g : all_connected_graphs(n))
      for (const auto& c : cut_instances(g)) {
        CutReport r;
        check_extension(c, r);
        ASSERT_TRUE(r.ok()) << (r.notes.empty() ? "" : r.notes[0]);
        ASSERT_EQ(r.accepted, r.realized);
      }
}
