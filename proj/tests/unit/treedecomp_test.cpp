#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "meccount/treedecomp.hpp"

using namespace meccount;
using namespace meccount::testing;

namespace {

// every edge of g lies inside one side, and the shared vertices separate the rest
bool separates(const UndirectedGraph& g, const VertexSet& h1, const VertexSet& h2) {
  for (auto e : g.edges()) {
    bool in1 = set_contains(h1, e.a) && set_contains(h1, e.b);
    bool in2 = set_contains(h2, e.a) && set_contains(h2, e.b);
    if (!in1 && !in2) return false;
  }
  return true;
}

}  // namespace

TEST(TreeDecomp, TreesHaveWidthOne) {
  auto td = tree_decomposition(path_graph(5));
  EXPECT_EQ(td.width(), 1u);
  EXPECT_TRUE(validate_td(path_graph(5), td));
  Rng rng(1);
  for (int k = 0; k < 100; ++k) {
    auto t = random_tree(2 + k % 30, 3, rng);
    for (auto h : {TdHeuristic::MinFill, TdHeuristic::MinDegree}) {
      auto d = tree_decomposition(t, h);
      ASSERT_EQ(d.width(), 1u);
      ASSERT_TRUE(validate_td(t, d));
    }
  }
}

TEST(TreeDecomp, CliqueAndCycle) {
  auto k4 = tree_decomposition(complete_graph(4));
  EXPECT_EQ(k4.width(), 3u);
  EXPECT_TRUE(validate_td(complete_graph(4), k4));
  auto c4 = tree_decomposition(cycle_graph(4), TdHeuristic::MinFill);
  EXPECT_EQ(c4.width(), 2u);
  EXPECT_TRUE(validate_td(cycle_graph(4), c4));
}

TEST(TreeDecomp, SmallCases) {
  auto one = tree_decomposition(UndirectedGraph(vset({'a'}), {}));
  EXPECT_EQ(one.bags.size(), 1u);
  EXPECT_EQ(one.width(), 0u);
  EXPECT_TRUE(tree_decomposition(UndirectedGraph{}).bags.empty());
  EXPECT_THROW(tree_decomposition(UndirectedGraph(vset({'a', 'b'}), {})), InputError);
}

TEST(TreeDecomp, ValidationExamples) {
  auto p3 = ugraph({{0, 1}, {1, 2}});
  EXPECT_TRUE(validate_td(p3, {{vset({'a', 'b'}), vset({'b', 'c'})}, {{0, 1}}, 0}));
  auto uncovered = validate_td(p3, {{vset({'a', 'b'}), vset({'c'})}, {{0, 1}}, 0});
  EXPECT_FALSE(uncovered);
  EXPECT_FALSE(uncovered.diagnostic.empty());
  auto k3 = complete_graph(3);
  EXPECT_FALSE(validate_td(k3, {{vset({'a', 'b'}), vset({'b', 'c'}), vset({'a', 'c'})}, {{0, 1}, {1, 2}}, 0}));
  // not a tree
  EXPECT_FALSE(validate_td(p3, {{vset({'a', 'b'}), vset({'b', 'c'})}, {}, 0}));
  EXPECT_FALSE(validate_td(p3, {{vset({'a', 'b', 'c'}), vset({'b', 'c'})}, {{0, 1}, {1, 0}}, 0}));
}

TEST(TreeDecomp, HeuristicOutputIsValid) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : all_connected_graphs(n))
      for (auto h : {TdHeuristic::MinFill, TdHeuristic::MinDegree}) {
        auto td = tree_decomposition(g, h);
        auto v = validate_td(g, td);
        ASSERT_TRUE(v) << v.diagnostic;
        ASSERT_EQ(td.root, 0u);
      }
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    auto g = random_connected_graph(8 + k % 40, 4, rng);
    auto v = validate_td(g, tree_decomposition(g));
    ASSERT_TRUE(v) << v.diagnostic;
  }
}

TEST(TreeDecomp, CutFollowsLastChild) {
  // root X4 with children X6, X7; X6 -> X8, X7 -> X9
  TreeDecomposition td{{vset({'c', 'd'}), vset({'b', 'c'}), vset({'d', 'e'}), vset({'a', 'b'}), vset({'e', 'f'})},
                       {{0, 1}, {0, 2}, {1, 3}, {2, 4}},
                       0};
  ASSERT_TRUE(validate_td(path_graph(6), td));
  EXPECT_EQ(td.children(0), (std::vector<std::size_t>{1, 2}));
  TdCut cut = cut_last_child(td, 0);
  EXPECT_EQ(cut.r2, 2u);
  EXPECT_EQ(cut.td1.bags, (std::vector<VertexSet>{vset({'c', 'd'}), vset({'b', 'c'}), vset({'a', 'b'})}));
  EXPECT_EQ(cut.td1.bags[cut.td1.root], vset({'c', 'd'}));
  EXPECT_EQ(cut.td2.bags, (std::vector<VertexSet>{vset({'d', 'e'}), vset({'e', 'f'})}));
  EXPECT_EQ(cut.td2.bags[cut.td2.root], vset({'d', 'e'}));
  EXPECT_EQ(cut.td1.tree_edges.size(), 2u);
  EXPECT_EQ(cut.td2.tree_edges.size(), 1u);
}

TEST(TreeDecomp, CutSmallShapes) {
  TreeDecomposition two{{vset({'a', 'b'}), vset({'b', 'c'})}, {{0, 1}}, 0};
  TdCut c = cut_last_child(two, 0);
  EXPECT_EQ(c.td1.bags.size(), 1u);
  EXPECT_EQ(c.td2.bags.size(), 1u);
  EXPECT_EQ(c.r2, 1u);

  TreeDecomposition star{{vset({'a'}), vset({'a', 'b'}), vset({'a', 'c'}), vset({'a', 'd'})},
                         {{0, 1}, {0, 2}, {0, 3}},
                         0};
  TdCut s = cut_last_child(star, 0);
  EXPECT_EQ(s.r2, 3u);
  EXPECT_EQ(s.td1.bags.size(), 3u);
  EXPECT_EQ(s.td1.children(s.td1.root).size(), 2u);
  EXPECT_EQ(s.td2.bags, (std::vector<VertexSet>{vset({'a', 'd'})}));

  TreeDecomposition leaf{{vset({'a'})}, {}, 0};
  EXPECT_THROW(cut_last_child(leaf, 0), PreconditionError);
  EXPECT_THROW(cut_last_child(two, 1), PreconditionError);
}

TEST(TreeDecomp, CutsSplitTheGraphAtTheSeparator) {
  Rng rng(21);
  for (int k = 0; k < 150; ++k) {
    auto g = random_connected_graph(6 + k % 20, 4, rng);
    std::vector<std::pair<UndirectedGraph, TreeDecomposition>> work{{g, tree_decomposition(g)}};
    while (!work.empty()) {
      auto [h, td] = work.back();
      work.pop_back();
      ASSERT_TRUE(validate_td(h, td));
      if (td.bags.size() < 2) continue;
      TdCut cut = cut_last_child(td, td.root);
      VertexSet h1 = cut.td1.vertices(), h2 = cut.td2.vertices();
      ASSERT_EQ(set_intersection(h1, h2), set_intersection(td.bags[td.root], td.bags[cut.r2]));
      ASSERT_EQ(set_union(h1, h2), h.vertices());
      ASSERT_TRUE(separates(h, h1, h2));
      ASSERT_EQ(cut.td1.bags.size() + cut.td2.bags.size(), td.bags.size());
      work.emplace_back(h.induced(h1), cut.td1);
      work.emplace_back(h.induced(h2), cut.td2);
    }
  }
}
