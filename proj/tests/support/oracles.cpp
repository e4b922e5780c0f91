#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace meccount::oracle {

bool chordal(const UndirectedGraph& u) {
  const auto& vs = u.vertices();
  const std::size_t n = vs.size();
  // an induced subgraph that is a cycle of length >= 4
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (__builtin_popcountll(s) < 4) continue;
    VertexSet sub;
    for (std::size_t k = 0; k < n; ++k)
      if (s >> k & 1) sub.push_back(vs[k]);
    UndirectedGraph g = u.induced(sub);
    bool all_two = std::all_of(sub.begin(), sub.end(), [&](VertexId v) { return g.neighbors(v).size() == 2; });
    if (all_two && g.is_connected()) return false;
  }
  return true;
}

std::vector<VStructure> vstructs(const Pdag& p) {
  std::vector<VStructure> out;
  for (VertexId a : p.vertices())
    for (VertexId b : p.vertices())
      for (VertexId c : p.vertices()) {
        if (!(a < c) || a == b || c == b) continue;
        if (p.is_directed(a, b) && p.is_directed(c, b) && !p.adjacent(a, c)) out.push_back({a, b, c});
      }
  std::sort(out.begin(), out.end());
  return out;
}

bool acyclic(const Pdag& dag) {
  std::map<VertexId, int> indeg;
  for (VertexId v : dag.vertices()) indeg[v] = 0;
  for (auto e : dag.edges()) {
    if (e.mark == EdgeMark::Undirected) return false;
    ++indeg[e.mark == EdgeMark::Forward ? e.b : e.a];
  }
  std::vector<VertexId> ready;
  for (auto [v, d] : indeg)
    if (d == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    VertexId v = ready.back();
    ready.pop_back();
    ++removed;
    for (VertexId w : dag.vertices())
      if (dag.is_directed(v, w) && --indeg[w] == 0) ready.push_back(w);
  }
  return removed == dag.size();
}

std::vector<Pdag> dags(const UndirectedGraph& u) {
  auto es = u.edges();
  std::vector<Pdag> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << es.size()); ++m) {
    Pdag p(u.vertices());
    for (std::size_t k = 0; k < es.size(); ++k) {
      if (m >> k & 1)
        p.add_directed(es[k].b, es[k].a);
      else
        p.add_directed(es[k].a, es[k].b);
    }
    if (acyclic(p)) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Pdag> mecs(const UndirectedGraph& u) {
  std::map<std::vector<VStructure>, std::vector<Pdag>> classes;
  for (auto& d : dags(u)) classes[vstructs(d)].push_back(d);
  std::vector<Pdag> out;
  for (const auto& [key, members] : classes) {
    Pdag m(u.vertices());
    for (auto e : u.edges()) {
      bool fwd = false, bwd = false;
      for (const auto& d : members) {
        fwd |= d.is_directed(e.a, e.b);
        bwd |= d.is_directed(e.b, e.a);
      }
      if (fwd && bwd)
        m.add_undirected(e.a, e.b);
      else if (fwd)
        m.add_directed(e.a, e.b);
      else
        m.add_directed(e.b, e.a);
    }
    out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), [](const Pdag& x, const Pdag& y) { return x.edges() < y.edges(); });
  return out;
}

std::size_t count_mecs(const UndirectedGraph& u) {
  std::set<std::vector<VStructure>> keys;
  for (auto& d : dags(u)) keys.insert(vstructs(d));
  return keys.size();
}

namespace {

bool search(const Pdag& p, std::vector<VertexId>& path, const std::function<bool(const std::vector<VertexId>&)>& done) {
  if (done(path)) return true;
  VertexId prev = path[path.size() - 2], cur = path.back();
  for (VertexId w : p.vertices()) {
    if (!p.has_ordered(cur, w)) continue;
    if (std::find(path.begin(), path.end(), w) != path.end()) continue;
    if (p.adjacent(prev, w)) continue;
    path.push_back(w);
    if (search(p, path, done)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

bool tfp(const Pdag& p, OrderedEdge from, OrderedEdge to) {
  std::vector<VertexId> path{from.tail, from.head};
  return search(p, path, [&](const std::vector<VertexId>& q) {
    return q[q.size() - 2] == to.tail && q.back() == to.head;
  });
}

bool tfp(const Pdag& p, OrderedEdge from, VertexId to) {
  std::vector<VertexId> path{from.tail, from.head};
  return search(p, path, [&](const std::vector<VertexId>& q) { return q.back() == to; });
}

namespace {

TfpTable table_on(const Pdag& host, const Pdag& o) {
  TfpTable t(o.ordered_edges(), o.vertices());
  for (auto e : t.edges()) {
    for (auto f : t.edges())
      if (e != f && tfp(host, e, f)) t.set_p1(e, f);
    for (auto w : t.vertices())
      if (w != e.head && tfp(host, e, w)) t.set_p2(e, w);
  }
  return t;
}

}  // namespace

TfpTable table(const Pdag& p) { return table_on(p, p); }

Shadow shadow(const Pdag& m, const VertexSet& y) {
  Pdag o = induced_subgraph(m, y);
  TfpTable t = table_on(m, o);
  return {std::move(o), std::move(t)};
}

}  // namespace meccount::oracle
