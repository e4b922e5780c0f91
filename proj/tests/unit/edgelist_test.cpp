#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "fixtures.hpp"
#include "meccount/edgelist.hpp"

using namespace meccount;
using namespace meccount::testing;

TEST(EdgeList, ParsesLabelsInOrder) {
  auto g = parse_edge_list_string("B A\nA C\n");
  EXPECT_EQ(g.labels, (std::vector<std::string>{"A", "B", "C"}));
  EXPECT_EQ(g.graph, ugraph({{0, 1}, {0, 2}}));
  EXPECT_EQ(g.label(vid(1)), "B");
}

TEST(EdgeList, CommentsAndBlankLines) {
  auto g = parse_edge_list_string("# header\n\n  x1   x2  # trailing\n\t\nx2 x3\n#x3 x4\n");
  EXPECT_EQ(g.graph.num_vertices(), 3u);
  EXPECT_EQ(g.graph.num_edges(), 2u);
  EXPECT_EQ(parse_edge_list_string("").graph.num_vertices(), 0u);
  EXPECT_EQ(parse_edge_list_string("# nothing\n").graph.num_edges(), 0u);
}

TEST(EdgeList, RejectsMalformedLines) {
  auto message = [](const std::string& text) {
    try {
      parse_edge_list_string(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message("a b\na a\n").find("line 2"), std::string::npos);
  EXPECT_NE(message("a b\nb a\n").find("duplicate"), std::string::npos);
  EXPECT_NE(message("a b c\n").find("line 1"), std::string::npos);
  EXPECT_FALSE(message("a\n").empty());
  EXPECT_TRUE(message("a b\n").empty());
}

TEST(EdgeList, ReadsFiles) {
  std::string path = ::testing::TempDir() + "edgelist_test.txt";
  {
    std::ofstream out(path);
    out << "p q\nq r\nr p\n";
  }
  auto g = read_edge_list_file(path);
  EXPECT_EQ(g.graph.num_edges(), 3u);
  std::remove(path.c_str());
  EXPECT_THROW(read_edge_list_file(path), InputError);
}
