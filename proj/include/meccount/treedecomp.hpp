#pragma once

#include <string>
#include <utility>
#include <vector>

#include "meccount/graph.hpp"

namespace meccount {

enum class TdHeuristic { MinFill, MinDegree };

struct TreeDecomposition {
  std::vector<VertexSet> bags;
  std::vector<std::pair<std::size_t, std::size_t>> tree_edges;
  std::size_t root = 0;

  std::size_t width() const;  // max bag size - 1
  // children of `b` when rooted at `root`, ascending bag index
  std::vector<std::size_t> children(std::size_t b) const;
  std::vector<std::size_t> neighbors(std::size_t b) const;
  VertexSet vertices() const;  // union of bags
};

TreeDecomposition tree_decomposition(const UndirectedGraph& u, TdHeuristic h = TdHeuristic::MinFill);

struct TdValidation {
  bool ok = true;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

TdValidation validate_td(const UndirectedGraph& u, const TreeDecomposition& td);

struct TdCut {
  TreeDecomposition td1;  // rooted at the old root
  TreeDecomposition td2;  // rooted at r2
  std::size_t r2 = 0;     // index of the cut child in the original decomposition
};

// removes the edge from r1 (the root) to its last child
TdCut cut_last_child(const TreeDecomposition& td, std::size_t r1);

}  // namespace meccount
