#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "generators.hpp"
#include "meccount/graph.hpp"
#include "oracles.hpp"

using namespace meccount;
using namespace meccount::testing;

TEST(Graph, RejectsSelfLoopsAndDuplicates) {
  EXPECT_THROW(ugraph({{0, 0}}), InputError);
  EXPECT_THROW(ugraph({{0, 1}, {1, 0}}), InputError);
  Pdag p(vset({'a', 'b'}));
  p.add_undirected(A, B);
  EXPECT_THROW(p.add_directed(B, A), InputError);
  EXPECT_THROW(p.add_directed(A, A), InputError);
}

TEST(Graph, PdagCapacity) {
  std::vector<VertexId> vs;
  for (std::uint32_t k = 0; k < 65; ++k) vs.push_back(vid(k));
  EXPECT_THROW(Pdag{vs}, CapacityError);
  vs.pop_back();
  EXPECT_NO_THROW(Pdag{vs});
}

TEST(Graph, OrderedEdgeView) {
  Pdag p = pdag({"a-b", "b>c"});
  auto es = p.ordered_edges();
  std::vector<OrderedEdge> want{oe('a', 'b'), oe('b', 'a'), oe('b', 'c')};
  EXPECT_EQ(es, want);
  EXPECT_TRUE(p.is_undirected(B, A));
  EXPECT_TRUE(p.is_directed(B, C));
  EXPECT_FALSE(p.is_directed(C, B));
}

TEST(Graph, InducedSubgraphExamples) {
  EXPECT_EQ(induced_subgraph(pdag({"a>b", "c>b"}), vset({'a', 'b'})), pdag({"a>b"}));
  Pdag two = induced_subgraph(pdag({"a-b", "b-c"}), vset({'a', 'c'}));
  EXPECT_EQ(two.size(), 2u);
  EXPECT_EQ(two.num_edges(), 0u);
  EXPECT_EQ(induced_subgraph(pdag({"a-b", "b-c", "c-d"}), vset({'a', 'b', 'd'})), pdag({"a-b"}, {'d'}));
  EXPECT_THROW(induced_subgraph(pdag({"a-b"}), vset({'a', 'z'})), InputError);
}

TEST(Graph, NeighborsExamples) {
  Pdag star = pdag({"c-x", "c-y", "c-z"});
  EXPECT_EQ(neighbors(star, vset({'c'})), vset({'x', 'y', 'z'}));
  EXPECT_EQ(neighbors(star, {}), VertexSet{});
  Pdag path = pdag({"a-b", "b-c", "c-d"});
  EXPECT_EQ(neighbors(path, vset({'b', 'c'})), vset({'a', 'b', 'c', 'd'}));
  EXPECT_THROW(neighbors(path, vset({'q'})), InputError);
}

TEST(Graph, UndirectedComponentsExamples) {
  auto comps = undirected_components(pdag({"a>b", "b-c"}));
  std::vector<VertexSet> want{vset({'a'}), vset({'b', 'c'})};
  EXPECT_EQ(comps, want);
  EXPECT_EQ(undirected_components(pdag({"a-b", "b-c", "c-a"})).size(), 1u);
  EXPECT_EQ(undirected_components(pdag({"a>b", "b>c", "a>c"})).size(), 3u);
}

TEST(Graph, UndirectedComponentsPartition) {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    Pdag p = random_chain_graph(rng, 8, 14);
    auto comps = undirected_components(p);
    VertexSet all;
    std::size_t total = 0;
    for (const auto& c : comps) {
      total += c.size();
      all = set_union(all, c);
      std::vector<std::pair<VertexId, VertexId>> und;
      for (auto e : induced_subgraph(p, c).edges())
        if (e.mark == EdgeMark::Undirected) und.emplace_back(e.a, e.b);
      EXPECT_TRUE(UndirectedGraph(c, und).is_connected());
    }
    EXPECT_EQ(all, p.vertices());
    EXPECT_EQ(total, p.size());
  }
}

TEST(Graph, ChordalExamples) {
  EXPECT_FALSE(is_chordal(cycle_graph(4)));
  EXPECT_TRUE(is_chordal(path_graph(6)));
  EXPECT_TRUE(is_chordal(ugraph({{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}})));
}

TEST(Graph, ChordalMatchesChordlessCycleSearch) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : all_graphs(n)) ASSERT_EQ(is_chordal(g), oracle::chordal(g));
  Rng rng(5);
  for (int t = 0; t < 400; ++t) {
    int n = 7 + t % 2;
    auto g = random_connected_graph(n, n - 1, rng, 0.35);
    ASSERT_EQ(is_chordal(g), oracle::chordal(g));
  }
}

TEST(Graph, SkeletonExamples) {
  EXPECT_EQ(skeleton(pdag({"a>b", "c>b"})), ugraph({{0, 1}, {1, 2}}));
  EXPECT_EQ(skeleton(Pdag::undirected(ugraph({{0, 1}, {1, 2}}))), ugraph({{0, 1}, {1, 2}}));
  EXPECT_EQ(skeleton(Pdag{}), UndirectedGraph{});
}

TEST(Graph, SkeletonCommutesWithInduction) {
  Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    Pdag p = random_chain_graph(rng, 8, 14);
    VertexSet s;
    for (VertexId x : p.vertices())
      if (rng() % 2) s.push_back(x);
    EXPECT_EQ(skeleton(induced_subgraph(p, s)), skeleton(p).induced(s));
  }
}

TEST(Graph, MarkovUnionExamples) {
  EXPECT_EQ(markov_union({pdag({"a-b"}), pdag({"a>b"})}), pdag({"a>b"}));
  EXPECT_EQ(markov_union({pdag({"a-b"}), pdag({"b-c"})}), pdag({"a-b", "b-c"}));
  EXPECT_THROW(markov_union({pdag({"a>b"}), pdag({"b>a"})}), PreconditionError);
}

TEST(Graph, MarkovUnionCommutativeAssociative) {
  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    // three synchronous graphs: random marks relative to one reference orientation
    auto u = random_connected_graph(6, 4, rng);
    std::vector<Pdag> ps;
    for (int k = 0; k < 3; ++k) {
      Pdag p(u.vertices());
      for (auto e : u.edges()) {
        if (rng() % 2) continue;
        if (rng() % 2)
          p.add_undirected(e.a, e.b);
        else
          p.add_directed(e.a, e.b);
      }
      ps.push_back(p);
    }
    Pdag abc = markov_union({markov_union({ps[0], ps[1]}), ps[2]});
    Pdag a_bc = markov_union({ps[0], markov_union({ps[1], ps[2]})});
    Pdag cba = markov_union({ps[2], ps[1], ps[0]});
    EXPECT_EQ(abc, a_bc);
    EXPECT_EQ(abc, cba);
  }
}
