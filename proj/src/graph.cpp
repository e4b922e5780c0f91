#include "meccount/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace meccount {

VertexSet make_vertex_set(std::vector<VertexId> vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool set_contains(const VertexSet& s, VertexId v) { return std::binary_search(s.begin(), s.end(), v); }

bool is_subset(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

// ---- UndirectedGraph

UndirectedGraph::UndirectedGraph(VertexSet vertices, const std::vector<std::pair<VertexId, VertexId>>& edges)
    : vertices_(make_vertex_set(std::move(vertices))), adjacency_(vertices_.size()) {
  for (auto [a, b] : edges) {
    if (a == b) throw InputError("self loop on vertex " + std::to_string(a.value));
    if (!contains(a) || !contains(b)) throw InputError("edge endpoint not in vertex set");
    adjacency_[index_of(a)].push_back(b);
    adjacency_[index_of(b)].push_back(a);
  }
  for (auto& row : adjacency_) {
    std::sort(row.begin(), row.end());
    if (std::adjacent_find(row.begin(), row.end()) != row.end()) throw InputError("duplicate edge");
    edge_count_ += row.size();
  }
  edge_count_ /= 2;
}

UndirectedGraph UndirectedGraph::from_edges(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  std::vector<VertexId> vs;
  std::vector<std::pair<VertexId, VertexId>> es;
  for (auto [a, b] : edges) {
    vs.push_back(vid(a));
    vs.push_back(vid(b));
    es.emplace_back(vid(a), vid(b));
  }
  return UndirectedGraph(make_vertex_set(std::move(vs)), es);
}

std::size_t UndirectedGraph::index_of(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) throw InputError("unknown vertex " + std::to_string(v.value));
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool UndirectedGraph::contains(VertexId v) const { return set_contains(vertices_, v); }

const VertexSet& UndirectedGraph::neighbors(VertexId v) const { return adjacency_[index_of(v)]; }

bool UndirectedGraph::adjacent(VertexId a, VertexId b) const { return set_contains(neighbors(a), b); }

std::vector<UndirectedEdge> UndirectedGraph::edges() const {
  std::vector<UndirectedEdge> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    for (VertexId w : adjacency_[i])
      if (vertices_[i] < w) out.push_back({vertices_[i], w});
  return out;
}

UndirectedGraph UndirectedGraph::induced(const VertexSet& s) const {
  UndirectedGraph g;
  for (VertexId v : s)
    if (!contains(v)) throw InputError("induced: vertex " + std::to_string(v.value) + " not in graph");
  g.vertices_ = s;
  g.adjacency_.resize(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    g.adjacency_[i] = set_intersection(neighbors(s[i]), s);
    g.edge_count_ += g.adjacency_[i].size();
  }
  g.edge_count_ /= 2;
  return g;
}

VertexSet UndirectedGraph::neighborhood(const VertexSet& x) const {
  std::vector<VertexId> acc;
  for (VertexId v : x)
    for (VertexId w : neighbors(v)) acc.push_back(w);
  return set_difference(make_vertex_set(std::move(acc)), x);
}

std::vector<VertexSet> UndirectedGraph::components() const {
  std::vector<VertexSet> out;
  std::vector<char> seen(vertices_.size(), 0);
  for (std::size_t s = 0; s < vertices_.size(); ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      std::size_t i = stack.back();
      stack.pop_back();
      comp.push_back(vertices_[i]);
      for (VertexId w : adjacency_[i]) {
        std::size_t j = index_of(w);
        if (!seen[j]) {
          seen[j] = 1;
          stack.push_back(j);
        }
      }
    }
    out.push_back(make_vertex_set(std::move(comp)));
  }
  return out;
}

bool UndirectedGraph::is_connected() const { return components().size() <= 1; }

// ---- Pdag

Pdag::Pdag(VertexSet vertices) : vertices_(make_vertex_set(std::move(vertices))) {
  if (vertices_.size() > kMaxVertices)
    throw CapacityError("pdag limited to 64 vertices, got " + std::to_string(vertices_.size()));
  adj_.assign(vertices_.size(), 0);
  out_.assign(vertices_.size(), 0);
}

Pdag Pdag::undirected(const UndirectedGraph& g) {
  Pdag p(g.vertices());
  for (auto e : g.edges()) p.add_undirected(e.a, e.b);
  return p;
}

std::optional<std::size_t> Pdag::find(VertexId v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Pdag::index_of(VertexId v) const {
  auto i = find(v);
  if (!i) throw InputError("unknown vertex " + std::to_string(v.value));
  return *i;
}

Pdag::Mask Pdag::all_mask() const {
  return vertices_.size() == 64 ? ~Mask{0} : (bit(vertices_.size()) - 1);
}

Pdag::Mask Pdag::in_of(std::size_t i) const {
  Mask m = 0;
  Mask cand = adj_[i];
  while (cand) {
    int j = std::countr_zero(cand);
    cand &= cand - 1;
    if (out_[j] & bit(i)) m |= bit(j);
  }
  return m;
}

std::pair<std::size_t, std::size_t> Pdag::pair_index(VertexId a, VertexId b) const {
  if (a == b) throw InputError("self loop on vertex " + std::to_string(a.value));
  return {index_of(a), index_of(b)};
}

void Pdag::add_undirected(VertexId a, VertexId b) {
  auto [i, j] = pair_index(a, b);
  if (adj_[i] & bit(j)) throw InputError("duplicate edge");
  adj_[i] |= bit(j);
  adj_[j] |= bit(i);
  out_[i] |= bit(j);
  out_[j] |= bit(i);
}

void Pdag::add_directed(VertexId tail, VertexId head) {
  auto [i, j] = pair_index(tail, head);
  if (adj_[i] & bit(j)) throw InputError("duplicate edge");
  adj_[i] |= bit(j);
  adj_[j] |= bit(i);
  out_[i] |= bit(j);
}

void Pdag::set_directed(VertexId tail, VertexId head) {
  auto [i, j] = pair_index(tail, head);
  if (!(adj_[i] & bit(j))) throw InputError("set_directed on missing edge");
  out_[i] |= bit(j);
  out_[j] &= ~bit(i);
}

void Pdag::set_undirected(VertexId a, VertexId b) {
  auto [i, j] = pair_index(a, b);
  if (!(adj_[i] & bit(j))) throw InputError("set_undirected on missing edge");
  out_[i] |= bit(j);
  out_[j] |= bit(i);
}

void Pdag::remove_edge(VertexId a, VertexId b) {
  auto [i, j] = pair_index(a, b);
  adj_[i] &= ~bit(j);
  adj_[j] &= ~bit(i);
  out_[i] &= ~bit(j);
  out_[j] &= ~bit(i);
}

bool Pdag::adjacent(VertexId a, VertexId b) const {
  auto i = find(a), j = find(b);
  return i && j && (adj_[*i] & bit(*j));
}

bool Pdag::has_ordered(VertexId tail, VertexId head) const {
  auto i = find(tail), j = find(head);
  return i && j && (out_[*i] & bit(*j));
}

bool Pdag::is_directed(VertexId tail, VertexId head) const {
  return has_ordered(tail, head) && !has_ordered(head, tail);
}

bool Pdag::is_undirected(VertexId a, VertexId b) const { return has_ordered(a, b) && has_ordered(b, a); }

std::size_t Pdag::num_edges() const {
  std::size_t c = 0;
  for (Mask m : adj_) c += std::popcount(m);
  return c / 2;
}

std::vector<OrderedEdge> Pdag::ordered_edges() const {
  std::vector<OrderedEdge> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    Mask m = out_[i];
    while (m) {
      int j = std::countr_zero(m);
      m &= m - 1;
      out.push_back({vertices_[i], vertices_[j]});
    }
  }
  return out;
}

std::vector<MarkedEdge> Pdag::edges() const {
  std::vector<MarkedEdge> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    Mask m = i == 63 ? 0 : adj_[i] & ~(bit(i + 1) - 1);
    while (m) {
      int j = std::countr_zero(m);
      m &= m - 1;
      bool fwd = out_[i] & bit(j), bwd = out_[j] & bit(i);
      EdgeMark mark = fwd && bwd ? EdgeMark::Undirected : (fwd ? EdgeMark::Forward : EdgeMark::Backward);
      out.push_back({vertices_[i], vertices_[j], mark});
    }
  }
  return out;
}

std::vector<OrderedEdge> Pdag::directed_edges() const {
  std::vector<OrderedEdge> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    Mask m = directed_out_mask(i);
    while (m) {
      int j = std::countr_zero(m);
      m &= m - 1;
      out.push_back({vertices_[i], vertices_[j]});
    }
  }
  return out;
}

Pdag induced_subgraph(const Pdag& p, const VertexSet& s) {
  Pdag q(s);
  std::vector<std::size_t> idx(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) idx[k] = p.index_of(s[k]);
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      std::size_t i = idx[a], j = idx[b];
      if (!(p.adj_mask(i) & bit(j))) continue;
      bool fwd = p.out_mask(i) & bit(j), bwd = p.out_mask(j) & bit(i);
      if (fwd && bwd)
        q.add_undirected(s[a], s[b]);
      else if (fwd)
        q.add_directed(s[a], s[b]);
      else
        q.add_directed(s[b], s[a]);
    }
  return q;
}

VertexSet neighbors(const Pdag& p, const VertexSet& x) {
  Pdag::Mask nm = 0;
  for (VertexId v : x) nm |= p.adj_mask(p.index_of(v));
  VertexSet out;
  while (nm) {
    int j = std::countr_zero(nm);
    nm &= nm - 1;
    out.push_back(p.vertex(j));
  }
  return out;
}

UndirectedGraph skeleton(const Pdag& p) {
  std::vector<std::pair<VertexId, VertexId>> es;
  for (auto e : p.edges()) es.emplace_back(e.a, e.b);
  return UndirectedGraph(p.vertices(), es);
}

std::vector<VertexSet> undirected_components(const Pdag& p) {
  std::vector<VertexSet> out;
  Pdag::Mask seen = 0;
  for (std::size_t s = 0; s < p.size(); ++s) {
    if (seen & bit(s)) continue;
    Pdag::Mask comp = bit(s), frontier = bit(s);
    while (frontier) {
      int i = std::countr_zero(frontier);
      frontier &= frontier - 1;
      Pdag::Mask nb = p.undirected_mask(i) & ~comp;
      comp |= nb;
      frontier |= nb;
    }
    seen |= comp;
    VertexSet vs;
    while (comp) {
      int i = std::countr_zero(comp);
      comp &= comp - 1;
      vs.push_back(p.vertex(i));
    }
    out.push_back(std::move(vs));
  }
  return out;
}

Pdag markov_union(std::span<const Pdag> inputs) {
  std::vector<VertexId> all;
  for (const auto& p : inputs) all.insert(all.end(), p.vertices().begin(), p.vertices().end());
  Pdag u(make_vertex_set(std::move(all)));
  for (const auto& p : inputs)
    for (auto e : p.edges()) {
      if (!u.adjacent(e.a, e.b)) u.add_undirected(e.a, e.b);
    }
  for (const auto& p : inputs)
    for (auto e : p.directed_edges()) {
      if (u.is_directed(e.head, e.tail))
        throw PreconditionError("markov union: inputs orient edge " + std::to_string(e.tail.value) + "," +
                                std::to_string(e.head.value) + " both ways");
      u.set_directed(e.tail, e.head);
    }
  return u;
}

Pdag markov_union(std::initializer_list<Pdag> inputs) {
  return markov_union(std::span<const Pdag>(inputs.begin(), inputs.size()));
}

namespace {

// maximum cardinality search then the standard zero-fill check
template <typename Nbr>
bool chordal_by_mcs(std::size_t n, Nbr&& nbr) {
  std::vector<int> weight(n, 0), order;
  std::vector<char> done(n, 0);
  std::vector<int> pos(n, -1);
  for (std::size_t step = 0; step < n; ++step) {
    int best = -1;
    for (std::size_t v = 0; v < n; ++v)
      if (!done[v] && (best < 0 || weight[v] > weight[best])) best = static_cast<int>(v);
    done[best] = 1;
    pos[best] = static_cast<int>(order.size());
    order.push_back(best);
    for (int w : nbr(best))
      if (!done[w]) ++weight[w];
  }
  for (int v : order) {
    std::vector<int> earlier;
    for (int w : nbr(v))
      if (pos[w] < pos[v]) earlier.push_back(w);
    if (earlier.size() < 2) continue;
    int last = *std::max_element(earlier.begin(), earlier.end(), [&](int a, int b) { return pos[a] < pos[b]; });
    auto ln = nbr(last);
    for (int w : earlier)
      if (w != last && std::find(ln.begin(), ln.end(), w) == ln.end()) return false;
  }
  return true;
}

}  // namespace

bool is_chordal(const UndirectedGraph& g) {
  const auto& vs = g.vertices();
  std::vector<std::vector<int>> adj(vs.size());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (VertexId w : g.neighbors(vs[i]))
      adj[i].push_back(static_cast<int>(std::lower_bound(vs.begin(), vs.end(), w) - vs.begin()));
  return chordal_by_mcs(vs.size(), [&](int v) -> const std::vector<int>& { return adj[v]; });
}

}  // namespace meccount
