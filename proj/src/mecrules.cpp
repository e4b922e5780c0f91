#include "meccount/mecrules.hpp"

#include <map>
#include <set>
#include <string>

#include "dense.hpp"

namespace meccount {

using detail::Dense;
using detail::each_bit;
using detail::Mask;
using detail::VTriple;

namespace {

std::vector<VStructure> to_public(const std::vector<VTriple>& ts, const VertexSet& vs) {
  std::vector<VStructure> out;
  out.reserve(ts.size());
  for (auto t : ts) out.push_back({vs[t.a], vs[t.b], vs[t.c]});
  return out;
}

bool reaches(const Dense& d, int s, int t) {
  Mask seen = Mask{1} << s, frontier = seen;
  while (frontier) {
    int i = detail::low(frontier);
    frontier &= frontier - 1;
    Mask nb = d.out[i] & ~seen;
    if (nb >> t & 1) return true;
    seen |= nb;
    frontier |= nb;
  }
  return false;
}

Dense skeleton_dense(const UndirectedGraph& u) {
  if (u.num_vertices() > Pdag::kMaxVertices)
    throw CapacityError("dense enumeration limited to 64 vertices");
  Dense d;
  d.n = static_cast<int>(u.num_vertices());
  const auto& vs = u.vertices();
  for (auto e : u.edges()) {
    int i = static_cast<int>(std::lower_bound(vs.begin(), vs.end(), e.a) - vs.begin());
    int j = static_cast<int>(std::lower_bound(vs.begin(), vs.end(), e.b) - vs.begin());
    d.add_skel(i, j);
  }
  return d;
}

std::vector<std::pair<int, int>> edge_list(const Dense& d) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < d.n; ++i) each_bit(d.adj[i] & ~((Mask{2} << i) - 1), [&](int j) { es.emplace_back(i, j); });
  return es;
}

template <typename F>
void orient_rec(Dense& d, const std::vector<std::pair<int, int>>& es, std::size_t k, F& f) {
  if (k == es.size()) {
    f(static_cast<const Dense&>(d));
    return;
  }
  auto [i, j] = es[k];
  if (!reaches(d, j, i)) {
    d.set_dir(i, j);
    orient_rec(d, es, k + 1, f);
    d.clear_marks(i, j);
  }
  if (!reaches(d, i, j)) {
    d.set_dir(j, i);
    orient_rec(d, es, k + 1, f);
  }
  d.clear_marks(i, j);
}

template <typename F>
void for_each_orientation(const Dense& skel, std::size_t cap, F&& f) {
  auto es = edge_list(skel);
  if (es.size() > cap)
    throw CapacityError("acyclic orientation enumeration capped at " + std::to_string(cap) + " edges, got " +
                        std::to_string(es.size()));
  Dense d = skel;
  d.out.fill(0);
  d.in.fill(0);
  orient_rec(d, es, 0, f);
}

// v-structure set -> OR of out masks of its members
std::map<std::vector<VTriple>, std::array<Mask, 64>> classes_of(const Dense& skel, std::size_t cap) {
  std::map<std::vector<VTriple>, std::array<Mask, 64>> classes;
  for_each_orientation(skel, cap, [&](const Dense& d) {
    auto [it, fresh] = classes.try_emplace(detail::vstructs(d));
    auto& acc = it->second;
    if (fresh) acc.fill(0);
    for (int i = 0; i < d.n; ++i) acc[i] |= d.out[i];
  });
  return classes;
}

Dense with_out(const Dense& skel, const std::array<Mask, 64>& out) {
  Dense r = skel;
  r.out = out;
  r.in.fill(0);
  for (int i = 0; i < r.n; ++i) each_bit(r.out[i], [&](int j) { r.in[j] |= Mask{1} << i; });
  return r;
}

}  // namespace

std::vector<VStructure> v_structures(const Pdag& p) {
  return to_public(detail::vstructs(Dense::from(p)), p.vertices());
}

bool is_chain_graph(const Pdag& p) { return detail::chain_graph(Dense::from(p)); }

bool is_strongly_protected(const Pdag& p, OrderedEdge e) {
  if (!p.is_directed(e.tail, e.head)) throw InputError("is_strongly_protected: not a directed edge");
  return detail::strongly_protected(Dense::from(p), static_cast<int>(p.index_of(e.tail)),
                                    static_cast<int>(p.index_of(e.head)));
}

bool is_partial_mec(const Pdag& p) { return detail::partial_mec(Dense::from(p)); }

bool is_mec(const Pdag& p) { return detail::mec(Dense::from(p)); }

void enumerate_acyclic_orientations(const UndirectedGraph& u, const PdagVisitor& visit,
                                    const EnumerationLimits& lim) {
  for_each_orientation(skeleton_dense(u), lim.orientation_edges,
                       [&](const Dense& d) { visit(d.to_pdag(u.vertices())); });
}

std::vector<Pdag> acyclic_orientations(const UndirectedGraph& u, const EnumerationLimits& lim) {
  std::vector<Pdag> out;
  enumerate_acyclic_orientations(u, [&](const Pdag& p) { out.push_back(p); }, lim);
  return out;
}

std::vector<Pdag> enumerate_mecs(const UndirectedGraph& u, const EnumerationLimits& lim) {
  Dense skel = skeleton_dense(u);
  std::vector<Pdag> out;
  for (const auto& [key, acc] : classes_of(skel, lim.orientation_edges))
    out.push_back(with_out(skel, acc).to_pdag(u.vertices()));
  return out;
}

Count brute_count_mecs(const UndirectedGraph& u, const EnumerationLimits& lim) {
  std::set<std::vector<VTriple>> seen;
  for_each_orientation(skeleton_dense(u), lim.orientation_edges,
                       [&](const Dense& d) { seen.insert(detail::vstructs(d)); });
  return Count(seen.size());
}

Count brute_count_mecs_andersson(const UndirectedGraph& u, const EnumerationLimits& lim) {
  Dense d = skeleton_dense(u);
  auto es = edge_list(d);
  if (es.size() > lim.andersson_edges)
    throw CapacityError("andersson enumeration capped at " + std::to_string(lim.andersson_edges) + " edges, got " +
                        std::to_string(es.size()));
  std::size_t hits = 0;
  std::vector<int> digit(es.size(), 0);
  for (auto [i, j] : es) d.set_und(i, j);
  while (true) {
    if (detail::mec(d)) ++hits;
    std::size_t k = 0;
    while (k < es.size()) {
      auto [i, j] = es[k];
      digit[k] = (digit[k] + 1) % 3;
      if (digit[k] == 0)
        d.set_und(i, j);
      else if (digit[k] == 1)
        d.set_dir(i, j);
      else
        d.set_dir(j, i);
      if (digit[k] != 0) break;
      ++k;
    }
    if (k == es.size()) break;
  }
  return Count(hits);
}

bool is_dag(const Pdag& p) {
  Dense d = Dense::from(p);
  for (int i = 0; i < d.n; ++i)
    if (d.und(i)) return false;
  return detail::chain_graph(d);
}

Pdag cpdag_of_dag(const Pdag& dag, const EnumerationLimits& lim) {
  if (!is_dag(dag)) throw InputError("cpdag_of_dag: input is not a DAG");
  Dense d = Dense::from(dag);
  auto target = detail::vstructs(d);
  Dense skel = d;
  std::array<Mask, 64> acc{};
  for_each_orientation(skel, lim.orientation_edges, [&](const Dense& o) {
    if (detail::vstructs(o) != target) return;
    for (int i = 0; i < o.n; ++i) acc[i] |= o.out[i];
  });
  return with_out(skel, acc).to_pdag(dag.vertices());
}

Pdag dag_member(const Pdag& m) {
  Dense d = Dense::from(m);
  // maximum cardinality search inside each undirected component; earlier -> later
  std::array<int, 64> rank{};
  std::array<int, 64> weight{};
  Mask left = d.all();
  int r = 0;
  while (left) {
    int best = -1;
    each_bit(left, [&](int v) {
      if (best < 0 || weight[v] > weight[best]) best = v;
    });
    left &= ~(Mask{1} << best);
    rank[best] = r++;
    each_bit(d.und(best) & left, [&](int w) { ++weight[w]; });
  }
  Dense out = d;
  for (int i = 0; i < d.n; ++i)
    each_bit(d.und(i), [&](int j) {
      if (rank[i] < rank[j]) out.set_dir(i, j);
    });
  Pdag dag = out.to_pdag(m.vertices());
  if (!is_dag(dag) || detail::vstructs(out) != detail::vstructs(d))
    throw PreconditionError("dag_member: input is not an MEC");
  return dag;
}

Pdag project_mec(const Pdag& m, const VertexSet& s, const EnumerationLimits& lim) {
  for (VertexId v : s)
    if (!m.contains(v)) throw InputError("project_mec: vertex not in graph");
  return cpdag_of_dag(induced_subgraph(dag_member(m), s), lim);
}

}  // namespace meccount
