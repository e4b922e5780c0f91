#include "meccount/treedecomp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace meccount {

namespace {

std::vector<std::vector<std::size_t>> tree_adjacency(const TreeDecomposition& td) {
  std::vector<std::vector<std::size_t>> adj(td.bags.size());
  for (auto [x, y] : td.tree_edges) {
    if (x >= adj.size() || y >= adj.size()) continue;
    adj[x].push_back(y);
    adj[y].push_back(x);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

// bag indices reachable from `start` without crossing the edge (start, blocked)
std::vector<char> side_of(const std::vector<std::vector<std::size_t>>& adj, std::size_t start, std::size_t blocked) {
  std::vector<char> seen(adj.size(), 0);
  std::vector<std::size_t> stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    std::size_t b = stack.back();
    stack.pop_back();
    for (std::size_t c : adj[b]) {
      if ((b == start && c == blocked) || seen[c]) continue;
      seen[c] = 1;
      stack.push_back(c);
    }
  }
  return seen;
}

}  // namespace

std::size_t TreeDecomposition::width() const {
  std::size_t w = 0;
  for (const auto& b : bags) w = std::max(w, b.size());
  return w == 0 ? 0 : w - 1;
}

std::vector<std::size_t> TreeDecomposition::neighbors(std::size_t b) const {
  std::vector<std::size_t> out;
  for (auto [x, y] : tree_edges) {
    if (x == b) out.push_back(y);
    if (y == b) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> TreeDecomposition::children(std::size_t b) const {
  // parent of b is the neighbour closer to the root
  auto adj = tree_adjacency(*this);
  std::vector<std::size_t> parent(bags.size(), bags.size());
  std::vector<std::size_t> queue{root};
  std::vector<char> seen(bags.size(), 0);
  seen[root] = 1;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (std::size_t c : adj[queue[k]])
      if (!seen[c]) {
        seen[c] = 1;
        parent[c] = queue[k];
        queue.push_back(c);
      }
  std::vector<std::size_t> out;
  for (std::size_t c : adj[b])
    if (parent[c] == b) out.push_back(c);
  return out;
}

VertexSet TreeDecomposition::vertices() const {
  VertexSet out;
  for (const auto& b : bags) out.insert(out.end(), b.begin(), b.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

TreeDecomposition tree_decomposition(const UndirectedGraph& u, TdHeuristic h) {
  TreeDecomposition td;
  if (u.num_vertices() == 0) return td;
  if (!u.is_connected()) throw InputError("tree_decomposition: graph is not connected");

  std::map<VertexId, std::set<VertexId>> adj;
  for (VertexId v : u.vertices()) adj[v] = std::set<VertexId>(u.neighbors(v).begin(), u.neighbors(v).end());

  auto fill_of = [&](VertexId v) {
    std::size_t missing = 0;
    const auto& nb = adj[v];
    for (auto a = nb.begin(); a != nb.end(); ++a)
      for (auto b = std::next(a); b != nb.end(); ++b)
        if (!adj[*a].count(*b)) ++missing;
    return missing;
  };

  std::vector<VertexId> order;
  std::map<VertexId, std::size_t> pos;
  std::vector<VertexSet> bags;
  while (!adj.empty()) {
    VertexId best{};
    std::size_t best_score = SIZE_MAX;
    for (const auto& [v, nb] : adj) {
      std::size_t score = h == TdHeuristic::MinFill ? fill_of(v) : nb.size();
      if (score < best_score) {
        best_score = score;
        best = v;
      }
    }
    std::vector<VertexId> nb(adj[best].begin(), adj[best].end());
    for (std::size_t a = 0; a < nb.size(); ++a)
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        adj[nb[a]].insert(nb[b]);
        adj[nb[b]].insert(nb[a]);
      }
    for (VertexId w : nb) adj[w].erase(best);
    adj.erase(best);
    VertexSet bag = nb;
    bag.push_back(best);
    pos[best] = order.size();
    order.push_back(best);
    bags.push_back(make_vertex_set(std::move(bag)));
  }

  // bag k belongs to order[k]; its parent is the bag of the earliest later-eliminated neighbour
  const std::size_t n = bags.size();
  std::vector<std::set<std::size_t>> tree(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t parent = n;
    for (VertexId w : bags[k])
      if (w != order[k] && (parent == n || pos[w] < parent)) parent = pos[w];
    if (parent < n) {
      tree[k].insert(parent);
      tree[parent].insert(k);
    }
  }

  // contract bags contained in a neighbouring bag
  std::vector<char> alive(n, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n && !changed; ++a) {
      if (!alive[a]) continue;
      for (std::size_t b : tree[a]) {
        if (!is_subset(bags[a], bags[b])) continue;
        for (std::size_t c : tree[a])
          if (c != b) {
            tree[c].erase(a);
            tree[c].insert(b);
            tree[b].insert(c);
          }
        tree[b].erase(a);
        tree[a].clear();
        alive[a] = 0;
        changed = true;
        break;
      }
    }
  }

  std::size_t root = n - 1;
  while (!alive[root]) --root;
  // number bags breadth first from the root, children in ascending original index
  std::vector<std::size_t> queue{root};
  std::vector<std::size_t> renum(n, n);
  renum[root] = 0;
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (std::size_t c : tree[queue[k]])
      if (renum[c] == n) {
        renum[c] = queue.size();
        queue.push_back(c);
      }
  td.bags.resize(queue.size());
  for (std::size_t k = 0; k < queue.size(); ++k) {
    td.bags[k] = bags[queue[k]];
    for (std::size_t c : tree[queue[k]])
      if (renum[c] > k) td.tree_edges.emplace_back(k, renum[c]);
  }
  td.root = 0;
  return td;
}

namespace {

TdValidation fail(std::string msg) { return {false, std::move(msg)}; }

}  // namespace

TdValidation validate_td(const UndirectedGraph& u, const TreeDecomposition& td) {
  const std::size_t l = td.bags.size();
  if (l == 0) return u.num_vertices() == 0 ? TdValidation{} : fail("no bags");
  if (td.root >= l) return fail("root out of range");
  if (td.tree_edges.size() != l - 1) return fail("tree has " + std::to_string(td.tree_edges.size()) + " edges for " +
                                                 std::to_string(l) + " bags");
  for (auto [x, y] : td.tree_edges)
    if (x >= l || y >= l || x == y) return fail("bad tree edge");
  auto adj = tree_adjacency(td);
  auto all = side_of(adj, 0, l);
  if (std::count(all.begin(), all.end(), 1) != static_cast<long>(l)) return fail("tree is not connected");

  if (td.vertices() != u.vertices()) return fail("bags do not cover exactly the graph's vertices");
  for (auto e : u.edges()) {
    bool covered = std::any_of(td.bags.begin(), td.bags.end(),
                               [&](const VertexSet& b) { return set_contains(b, e.a) && set_contains(b, e.b); });
    if (!covered)
      return fail("edge " + std::to_string(e.a.value) + "-" + std::to_string(e.b.value) + " not in any bag");
  }
  for (VertexId v : u.vertices()) {
    std::vector<std::size_t> holding;
    for (std::size_t b = 0; b < l; ++b)
      if (set_contains(td.bags[b], v)) holding.push_back(b);
    // connected iff holding bags induce |holding|-1 tree edges
    std::size_t inner = 0;
    for (auto [x, y] : td.tree_edges)
      if (set_contains(td.bags[x], v) && set_contains(td.bags[y], v)) ++inner;
    if (inner + 1 != holding.size())
      return fail("bags holding vertex " + std::to_string(v.value) + " are not connected");
  }
  // per tree edge: no vertex outside the separator on both sides, no graph edge across
  const auto& vs = u.vertices();
  auto pos = [&](VertexId v) { return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()); };
  std::vector<char> in_x(vs.size()), in_y(vs.size()), in_sep(vs.size());
  for (auto [x, y] : td.tree_edges) {
    auto sx = side_of(adj, x, y);
    std::fill(in_x.begin(), in_x.end(), 0);
    std::fill(in_y.begin(), in_y.end(), 0);
    std::fill(in_sep.begin(), in_sep.end(), 0);
    for (std::size_t b = 0; b < l; ++b)
      for (VertexId v : td.bags[b]) (sx[b] ? in_x : in_y)[pos(v)] = 1;
    for (VertexId v : set_intersection(td.bags[x], td.bags[y])) in_sep[pos(v)] = 1;
    for (std::size_t k = 0; k < vs.size(); ++k)
      if (in_x[k] && in_y[k] && !in_sep[k]) return fail("separator property fails on a tree edge");
    for (auto e : u.edges()) {
      std::size_t a = pos(e.a), b = pos(e.b);
      if (in_sep[a] || in_sep[b]) continue;
      if ((in_x[a] && in_y[b]) || (in_y[a] && in_x[b])) return fail("separator property fails on a tree edge");
    }
  }
  return {};
}

TdCut cut_last_child(const TreeDecomposition& td, std::size_t r1) {
  if (r1 != td.root) throw PreconditionError("cut_last_child: r1 must be the root");
  auto kids = td.children(r1);
  if (kids.empty()) throw PreconditionError("cut_last_child: root has no children");
  std::size_t r2 = kids.back();
  auto side2 = side_of(tree_adjacency(td), r2, r1);

  auto build = [&](bool second, std::size_t root) {
    TreeDecomposition out;
    std::vector<std::size_t> renum(td.bags.size(), td.bags.size());
    for (std::size_t b = 0; b < td.bags.size(); ++b)
      if (static_cast<bool>(side2[b]) == second) {
        renum[b] = out.bags.size();
        out.bags.push_back(td.bags[b]);
      }
    for (auto [x, y] : td.tree_edges)
      if (renum[x] < td.bags.size() && renum[y] < td.bags.size()) out.tree_edges.emplace_back(renum[x], renum[y]);
    out.root = renum[root];
    return out;
  };
  return {build(false, r1), build(true, r2), r2};
}

}  // namespace meccount
