#pragma once

#include <cstddef>
#include <vector>

#include "meccount/extension.hpp"
#include "meccount/graph.hpp"

namespace meccount {

struct VertexOrdering {
  std::vector<VertexId> order;  // order[k] has rank k + 1

  std::size_t rank(VertexId v) const;  // 1-based; throws InputError when absent
  bool contains(VertexId v) const;
};

// LBFS on c where each pick is the smallest canonical source of U_M(c, o)[X], X the first class
VertexOrdering lbfs_with_o(const UndirectedGraph& c, const Pdag& o);

bool is_perfect_elimination_ordering(const UndirectedGraph& c, const VertexOrdering& tau);

Pdag construct_mec(const DecompositionContext& ctx, const Pdag& m1, const Pdag& m2, const Pdag& o);

bool verify_merge(const Pdag& m, const DecompositionContext& ctx, const Pdag& m1, const Pdag& m2, const Pdag& o);

}  // namespace meccount
