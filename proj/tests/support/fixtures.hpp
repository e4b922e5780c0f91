#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "meccount/graph.hpp"

namespace meccount::testing {

constexpr VertexId A = vid(0), B = vid(1), C = vid(2), D = vid(3), E = vid(4);

inline UndirectedGraph ugraph(std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> es) {
  return UndirectedGraph::from_edges(es);
}

// "a-b", "a>b" tokens over single-letter vertices; extra lists isolated vertices
inline Pdag pdag(std::initializer_list<const char*> edges, std::initializer_list<char> extra = {}) {
  std::vector<VertexId> vs;
  for (const char* e : edges) {
    vs.push_back(vid(e[0] - 'a'));
    vs.push_back(vid(e[2] - 'a'));
  }
  for (char x : extra) vs.push_back(vid(x - 'a'));
  Pdag p(make_vertex_set(vs));
  for (const char* e : edges) {
    VertexId x = vid(e[0] - 'a'), y = vid(e[2] - 'a');
    if (e[1] == '-')
      p.add_undirected(x, y);
    else
      p.add_directed(x, y);
  }
  return p;
}

inline VertexSet vset(std::initializer_list<char> xs) {
  std::vector<VertexId> vs;
  for (char x : xs) vs.push_back(vid(x - 'a'));
  return make_vertex_set(vs);
}

inline OrderedEdge oe(char x, char y) { return {vid(x - 'a'), vid(y - 'a')}; }
inline VertexId v(char x) { return vid(x - 'a'); }

}  // namespace meccount::testing
