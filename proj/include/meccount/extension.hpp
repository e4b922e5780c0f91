#pragma once

#include "meccount/graph.hpp"
#include "meccount/shadow.hpp"
#include "meccount/tfp.hpp"

namespace meccount {

struct DecompositionContext {
  UndirectedGraph h;
  VertexSet h1, h2;  // vertex sets of H1, H2
  VertexSet i;       // h1 ∩ h2
  VertexSet s1, s2;  // bags, s1 ∩ s2 == i

  // S1 ∪ S2 ∪ N(S1 ∪ S2, H)
  VertexSet boundary() const;
  // S_a ∪ N(S_a, H_a), a in {1, 2}
  VertexSet child_boundary(int a) const;
  // throws PreconditionError naming the broken invariant
  void validate() const;
};

TfpTable dpf(const DecompositionContext& ctx, const Pdag& o, const Shadow& sh1, const Shadow& sh2);
bool is_valid_dpf(const TfpTable& t);
bool is_extension(const DecompositionContext& ctx, const Pdag& o, const Shadow& sh1, const Shadow& sh2);

}  // namespace meccount
