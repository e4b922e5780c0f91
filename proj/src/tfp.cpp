#include "meccount/tfp.hpp"

#include <algorithm>

#include "dense.hpp"

namespace meccount {

using detail::Dense;
using detail::Mask;

TfpTable::TfpTable(std::vector<OrderedEdge> edges, VertexSet vertices)
    : edges_(std::move(edges)),
      vertices_(std::move(vertices)),
      p1_(edges_.size(), edges_.size()),
      p2_(edges_.size(), vertices_.size()) {
  std::sort(edges_.begin(), edges_.end());
}

std::optional<std::size_t> TfpTable::edge_index(OrderedEdge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::optional<std::size_t> TfpTable::vertex_index(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool TfpTable::p1(OrderedEdge from, OrderedEdge to) const {
  auto a = edge_index(from), b = edge_index(to);
  return a && b && p1_.get(*a, *b);
}

bool TfpTable::p2(OrderedEdge from, VertexId to) const {
  auto a = edge_index(from);
  auto b = vertex_index(to);
  return a && b && p2_.get(*a, *b);
}

void TfpTable::set_p1(OrderedEdge from, OrderedEdge to) {
  auto a = edge_index(from), b = edge_index(to);
  if (!a || !b) throw InputError("p1 entry outside table domain");
  if (from == to) throw PreconditionError("p1 entry on identical edges");
  p1_.set(*a, *b);
}

void TfpTable::set_p2(OrderedEdge from, VertexId to) {
  auto a = edge_index(from);
  auto b = vertex_index(to);
  if (!a || !b) throw InputError("p2 entry outside table domain");
  if (from.head == to) throw PreconditionError("p2 entry on the edge head");
  p2_.set(*a, *b);
}

std::vector<std::pair<OrderedEdge, OrderedEdge>> TfpTable::p1_entries() const {
  std::vector<std::pair<OrderedEdge, OrderedEdge>> out;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    p1_.for_each_in_row(e, [&](std::size_t f) { out.emplace_back(edges_[e], edges_[f]); });
  return out;
}

std::vector<std::pair<OrderedEdge, VertexId>> TfpTable::p2_entries() const {
  std::vector<std::pair<OrderedEdge, VertexId>> out;
  for (std::size_t e = 0; e < edges_.size(); ++e)
    p2_.for_each_in_row(e, [&](std::size_t w) { out.emplace_back(edges_[e], vertices_[w]); });
  return out;
}

namespace {

struct Dfs {
  const Dense& d;
  std::vector<int> path;
  Mask on_path = 0;
  int tx = -1, ty = -1;  // edge target when tx >= 0, else vertex target ty

  bool hit() const {
    std::size_t l = path.size();
    if (tx >= 0) return path[l - 2] == tx && path[l - 1] == ty;
    return path[l - 1] == ty;
  }

  bool run() {
    if (hit()) return true;
    int prev = path[path.size() - 2], cur = path.back();
    Mask next = d.out[cur] & ~on_path & ~d.adj[prev];
    while (next) {
      int w = detail::low(next);
      next &= next - 1;
      path.push_back(w);
      on_path |= Mask{1} << w;
      if (run()) return true;
      path.pop_back();
      on_path &= ~(Mask{1} << w);
    }
    return false;
  }
};

}  // namespace

bool tfp_exists(const Pdag& p, OrderedEdge from, TfpTarget to) {
  if (!p.has_ordered(from.tail, from.head)) throw InputError("tfp_exists: start is not an ordered edge");
  Dense d = Dense::from(p);
  Dfs s{d, {}, 0, -1, -1};
  int u = static_cast<int>(p.index_of(from.tail)), v = static_cast<int>(p.index_of(from.head));
  if (auto* e = std::get_if<OrderedEdge>(&to)) {
    if (!p.has_ordered(e->tail, e->head)) throw InputError("tfp_exists: target is not an ordered edge");
    s.tx = static_cast<int>(p.index_of(e->tail));
    s.ty = static_cast<int>(p.index_of(e->head));
  } else {
    s.ty = static_cast<int>(p.index_of(std::get<VertexId>(to)));
  }
  s.path = {u, v};
  s.on_path = (Mask{1} << u) | (Mask{1} << v);
  return s.run();
}

namespace detail {

TfpTable export_table(const EdgeSpace& s, const SpaceTable& t, const Pdag& host) {
  TfpTable out(host.ordered_edges(), host.vertices());
  const auto& edges = out.edges();
  std::vector<int> to_dom(s.size(), -1);
  for (std::size_t k = 0; k < edges.size(); ++k) {
    int i = static_cast<int>(host.index_of(edges[k].tail)), j = static_cast<int>(host.index_of(edges[k].head));
    to_dom[s.at(i, j)] = static_cast<int>(k);
  }
  for (std::size_t e = 0; e < s.size(); ++e) {
    if (to_dom[e] < 0) {
      if (!t.p1.row_empty(e) || !t.p2.row_empty(e)) throw InvariantError("table row on an absent edge");
      continue;
    }
    t.p1.for_each_in_row(e, [&](std::size_t f) {
      if (to_dom[f] < 0) throw InvariantError("table column on an absent edge");
      out.p1_bits().set(to_dom[e], to_dom[f]);
    });
    t.p2.for_each_in_row(e, [&](std::size_t w) { out.p2_bits().set(to_dom[e], w); });
  }
  return out;
}

SpaceTable tfp_space(const EdgeSpace& s, const Dense& g) {
  SpaceTable t(s);
  seed_tfp(s, g, t);
  close_tfp(s, t);
  return t;
}

}  // namespace detail

TfpTable tfp_table(const Pdag& p) {
  Dense d = Dense::from(p);
  if (!detail::chain_graph(d) || !detail::chordal_und(d, d.all()))
    throw PreconditionError("tfp_table: input must be a chain graph with chordal undirected components");
  auto s = detail::EdgeSpace::of(d);
  return detail::export_table(s, detail::tfp_space(s, d), p);
}

TfpTable restrict_table(const TfpTable& t, const Pdag& o) {
  TfpTable out(o.ordered_edges(), o.vertices());
  std::vector<std::size_t> emap, vmap;
  for (auto e : out.edges()) {
    auto k = t.edge_index(e);
    if (!k) throw InputError("restrict_table: edge outside source domain");
    emap.push_back(*k);
  }
  for (auto v : out.vertices()) {
    auto k = t.vertex_index(v);
    if (!k) throw InputError("restrict_table: vertex outside source domain");
    vmap.push_back(*k);
  }
  for (std::size_t a = 0; a < emap.size(); ++a) {
    for (std::size_t b = 0; b < emap.size(); ++b)
      if (t.p1_bits().get(emap[a], emap[b])) out.p1_bits().set(a, b);
    for (std::size_t w = 0; w < vmap.size(); ++w)
      if (t.p2_bits().get(emap[a], vmap[w])) out.p2_bits().set(a, w);
  }
  return out;
}

bool is_canonical_source(const Pdag& p, VertexId s) {
  if (!p.contains(s)) throw InputError("is_canonical_source: unknown vertex");
  for (auto e : p.directed_edges())
    if (tfp_exists(p, e, s)) return false;
  return true;
}

}  // namespace meccount
