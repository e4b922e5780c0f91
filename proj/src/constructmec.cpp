#include "meccount/constructmec.hpp"

#include <algorithm>
#include <list>

#include "meccount/mecrules.hpp"
#include "meccount/tfp.hpp"

namespace meccount {

std::size_t VertexOrdering::rank(VertexId v) const {
  auto it = std::find(order.begin(), order.end(), v);
  if (it == order.end()) throw InputError("vertex not ranked");
  return static_cast<std::size_t>(it - order.begin()) + 1;
}

bool VertexOrdering::contains(VertexId v) const { return std::find(order.begin(), order.end(), v) != order.end(); }

VertexOrdering lbfs_with_o(const UndirectedGraph& c, const Pdag& o) {
  Pdag u = markov_union({Pdag::undirected(c), o});
  std::list<VertexSet> classes;
  if (c.num_vertices()) classes.push_back(c.vertices());
  VertexOrdering tau;
  while (!classes.empty()) {
    VertexSet& x = classes.front();
    Pdag w = induced_subgraph(u, x);
    auto pick = std::find_if(x.begin(), x.end(), [&](VertexId v) { return is_canonical_source(w, v); });
    if (pick == x.end()) throw InvariantError("lbfs_with_o: no canonical source in the leading class");
    VertexId v = *pick;
    x.erase(pick);
    tau.order.push_back(v);
    const VertexSet& nb = c.neighbors(v);
    for (auto it = classes.begin(); it != classes.end();) {
      VertexSet in = set_intersection(*it, nb), out = set_difference(*it, nb);
      it = classes.erase(it);
      if (!in.empty()) classes.insert(it, std::move(in));
      if (!out.empty()) classes.insert(it, std::move(out));
    }
  }
  return tau;
}

bool is_perfect_elimination_ordering(const UndirectedGraph& c, const VertexOrdering& tau) {
  if (tau.order.size() != c.num_vertices()) return false;
  for (std::size_t k = 0; k < tau.order.size(); ++k) {
    std::vector<VertexId> earlier;
    for (std::size_t j = 0; j < k; ++j)
      if (c.adjacent(tau.order[j], tau.order[k])) earlier.push_back(tau.order[j]);
    for (std::size_t a = 0; a < earlier.size(); ++a)
      for (std::size_t b = a + 1; b < earlier.size(); ++b)
        if (!c.adjacent(earlier[a], earlier[b])) return false;
  }
  return true;
}

namespace {

void check_inputs(const DecompositionContext& ctx, const Pdag& m1, const Pdag& m2, const Pdag& o) {
  ctx.validate();
  if (skeleton(m1) != ctx.h.induced(ctx.h1) || !is_mec(m1)) throw PreconditionError("m1 must be an MEC of H1");
  if (skeleton(m2) != ctx.h.induced(ctx.h2) || !is_mec(m2)) throw PreconditionError("m2 must be an MEC of H2");
  if (skeleton(o) != ctx.h.induced(ctx.boundary()) || !is_partial_mec(o))
    throw PreconditionError("o must be a partial MEC of the boundary graph");
}

UndirectedGraph ucc_graph(const Pdag& m, const VertexSet& comp) {
  std::vector<std::pair<VertexId, VertexId>> es;
  for (auto e : induced_subgraph(m, comp).edges())
    if (e.mark == EdgeMark::Undirected) es.emplace_back(e.a, e.b);
  return UndirectedGraph(comp, es);
}

}  // namespace

Pdag construct_mec(const DecompositionContext& ctx, const Pdag& m1, const Pdag& m2, const Pdag& o) {
  check_inputs(ctx, m1, m2, o);
  Pdag m = markov_union({m1, m2, o});
  for (const Pdag* mi : {&m1, &m2}) {
    for (const VertexSet& comp : undirected_components(*mi)) {
      if (comp.size() < 2) continue;
      UndirectedGraph c = ucc_graph(*mi, comp);
      const auto u = lbfs_with_o(c, o).order;
      for (std::size_t a = 1; a < u.size(); ++a) {
        for (std::size_t b = a; b-- > 0;) {
          if (!c.adjacent(u[b], u[a]) || !m.is_undirected(u[b], u[a])) continue;
          bool orient = false;
          for (std::size_t k = 0; k < b && !orient; ++k)
            orient = c.adjacent(u[k], u[b]) && !c.adjacent(u[k], u[a]) && m.is_directed(u[k], u[b]);
          for (std::size_t k = b + 1; k < a && !orient; ++k)
            orient = c.adjacent(u[b], u[k]) && c.adjacent(u[k], u[a]) && m.is_directed(u[b], u[k]) &&
                     m.is_directed(u[k], u[a]);
          if (orient) m.set_directed(u[b], u[a]);
        }
      }
    }
  }
  return m;
}

bool verify_merge(const Pdag& m, const DecompositionContext& ctx, const Pdag& m1, const Pdag& m2, const Pdag& o) {
  if (skeleton(m) != ctx.h || !is_mec(m)) return false;
  if (induced_subgraph(m, o.vertices()) != o) return false;
  if (v_structures(induced_subgraph(m, ctx.h1)) != v_structures(m1)) return false;
  if (v_structures(induced_subgraph(m, ctx.h2)) != v_structures(m2)) return false;
  return is_valid_dpf(tfp_table(m));
}

}  // namespace meccount
