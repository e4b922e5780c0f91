#pragma once

#include <istream>
#include <string>
#include <vector>

#include "meccount/graph.hpp"

namespace meccount {

// labels[id] is the token of vertex id; ids follow lexicographic label order
struct LabeledGraph {
  UndirectedGraph graph;
  std::vector<std::string> labels;

  const std::string& label(VertexId v) const { return labels.at(v.value); }
};

// "u v" per line, '#' starts a comment, blank lines ignored.
// Throws InputError with the line number on malformed lines, self loops and duplicate edges.
LabeledGraph parse_edge_list(std::istream& in);
LabeledGraph parse_edge_list_string(const std::string& text);
LabeledGraph read_edge_list_file(const std::string& path);

}  // namespace meccount
