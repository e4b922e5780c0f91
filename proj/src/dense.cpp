#include "dense.hpp"

#include <algorithm>

namespace meccount::detail {

Dense Dense::from(const Pdag& p) {
  Dense d;
  d.n = static_cast<int>(p.size());
  for (int i = 0; i < d.n; ++i) {
    d.adj[i] = p.adj_mask(i);
    d.out[i] = p.out_mask(i);
  }
  for (int i = 0; i < d.n; ++i) each_bit(d.out[i], [&](int j) { d.in[j] |= Mask{1} << i; });
  return d;
}

Pdag Dense::to_pdag(const VertexSet& vertices) const {
  Pdag p(vertices);
  for (int i = 0; i < n; ++i)
    each_bit(adj[i] & ~((Mask{2} << i) - 1), [&](int j) {
      bool f = out[i] >> j & 1, b = out[j] >> i & 1;
      if (f && b)
        p.add_undirected(vertices[i], vertices[j]);
      else if (f)
        p.add_directed(vertices[i], vertices[j]);
      else if (b)
        p.add_directed(vertices[j], vertices[i]);
      else
        throw InvariantError("dense graph has an unmarked skeleton edge");
    });
  return p;
}

bool chordal_und(const Dense& d, Mask verts) {
  std::array<int, 64> weight{}, pos{};
  std::array<int, 64> order{};
  int cnt = 0;
  Mask visited = 0;
  Mask left = verts;
  while (left) {
    int best = -1;
    each_bit(left, [&](int v) {
      if (best < 0 || weight[v] > weight[best]) best = v;
    });
    left &= ~(Mask{1} << best);
    visited |= Mask{1} << best;
    pos[best] = cnt;
    order[cnt++] = best;
    each_bit(d.und(best) & left, [&](int w) { ++weight[w]; });
  }
  Mask before = 0;
  for (int k = 0; k < cnt; ++k) {
    int v = order[k];
    Mask earlier = d.und(v) & before;
    before |= Mask{1} << v;
    if (std::popcount(earlier) < 2) continue;
    int last = -1;
    each_bit(earlier, [&](int w) {
      if (last < 0 || pos[w] > pos[last]) last = w;
    });
    Mask rest = earlier & ~(Mask{1} << last);
    if ((rest & ~d.und(last)) != 0) return false;
  }
  return true;
}

bool chain_graph(const Dense& d) {
  std::array<int, 64> comp{};
  int nc = 0;
  Mask seen = 0;
  for (int s = 0; s < d.n; ++s) {
    if (seen >> s & 1) continue;
    Mask c = Mask{1} << s, frontier = c;
    while (frontier) {
      int i = low(frontier);
      frontier &= frontier - 1;
      Mask nb = d.und(i) & ~c;
      c |= nb;
      frontier |= nb;
    }
    seen |= c;
    each_bit(c, [&](int i) { comp[i] = nc; });
    ++nc;
  }
  std::array<Mask, 64> cout{};
  for (int i = 0; i < d.n; ++i) {
    bool bad = false;
    each_bit(d.dout(i), [&](int j) {
      if (comp[j] == comp[i]) bad = true;
      cout[comp[i]] |= Mask{1} << comp[j];
    });
    if (bad) return false;
  }
  // Kahn on the component graph
  std::array<int, 64> indeg{};
  for (int c = 0; c < nc; ++c) each_bit(cout[c], [&](int t) { ++indeg[t]; });
  std::vector<int> stack;
  for (int c = 0; c < nc; ++c)
    if (!indeg[c]) stack.push_back(c);
  int done = 0;
  while (!stack.empty()) {
    int c = stack.back();
    stack.pop_back();
    ++done;
    each_bit(cout[c], [&](int t) {
      if (--indeg[t] == 0) stack.push_back(t);
    });
  }
  return done == nc;
}

bool has_forbidden_pattern(const Dense& d) {
  for (int v = 0; v < d.n; ++v) {
    Mask und = d.und(v);
    if (!und) continue;
    Mask parents = d.din(v);
    while (parents) {
      int u = low(parents);
      parents &= parents - 1;
      if (und & ~d.adj[u]) return true;
    }
  }
  return false;
}

bool partial_mec(const Dense& d) {
  return !has_forbidden_pattern(d) && chain_graph(d) && chordal_und(d, d.all());
}

bool strongly_protected(const Dense& d, int u, int v) {
  Mask bu = Mask{1} << u;
  if (d.din(u) & ~d.adj[v]) return true;         // w -> u -> v
  if (d.din(v) & ~bu & ~d.adj[u]) return true;   // u -> v <- w
  if (d.dout(u) & d.din(v)) return true;         // u -> w -> v
  Mask w = d.und(u) & d.din(v);                  // w - u - w', w -> v <- w'
  while (w) {
    int a = low(w);
    w &= w - 1;
    if (w & ~d.adj[a]) return true;
  }
  return false;
}

bool mec(const Dense& d) {
  if (!partial_mec(d)) return false;
  for (int u = 0; u < d.n; ++u) {
    Mask o = d.dout(u);
    while (o) {
      int v = low(o);
      o &= o - 1;
      if (!strongly_protected(d, u, v)) return false;
    }
  }
  return true;
}

std::vector<VTriple> vstructs(const Dense& d) {
  std::vector<VTriple> out;
  for (int b = 0; b < d.n; ++b) {
    Mask p = d.din(b);
    each_bit(p, [&](int a) {
      each_bit(p & ~d.adj[a] & ~((Mask{2} << a) - 1), [&](int c) {
        out.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c)});
      });
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeSpace EdgeSpace::of(const Dense& skel) {
  EdgeSpace s;
  s.n = skel.n;
  s.adj = skel.adj;
  s.index.assign(static_cast<std::size_t>(s.n) * s.n, -1);
  for (int i = 0; i < s.n; ++i)
    each_bit(skel.adj[i], [&](int j) {
      s.index[i * s.n + j] = static_cast<int>(s.edges.size());
      s.edges.emplace_back(static_cast<std::uint8_t>(i), static_cast<std::uint8_t>(j));
    });
  return s;
}

void seed_tfp(const EdgeSpace& s, const Dense& g, SpaceTable& t) {
  for (int u = 0; u < g.n; ++u)
    each_bit(g.out[u], [&](int v) {
      int e = s.at(u, v);
      each_bit(g.out[v] & ~g.adj[u] & ~(Mask{1} << u), [&](int w) {
        t.p1.set(e, s.at(v, w));
        t.p2.set(e, w);
      });
    });
}

void close_tfp(const EdgeSpace& s, SpaceTable& t) {
  const std::size_t m = s.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t e = 0; e < m; ++e) {
      if (t.p1.row_empty(e)) continue;
      const int head = s.edges[e].second;
      std::size_t c1 = t.p1.row_count(e), c2 = t.p2.row_count(e);
      std::vector<std::size_t> mids;
      t.p1.for_each_in_row(e, [&](std::size_t z) { mids.push_back(z); });
      for (std::size_t z : mids) {
        t.p1.or_row(e, t.p1, z);
        t.p2.or_row(e, t.p2, z);
      }
      t.p1.clear(e, e);
      t.p2.clear(e, head);
      if (t.p1.row_count(e) != c1 || t.p2.row_count(e) != c2) changed = true;
    }
  }
}

}  // namespace meccount::detail
