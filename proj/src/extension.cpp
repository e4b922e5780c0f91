#include "meccount/extension.hpp"

#include <algorithm>

#include "combine.hpp"

namespace meccount {

namespace detail {

namespace {

int index_in(const VertexSet& vs, VertexId v) {
  auto it = std::lower_bound(vs.begin(), vs.end(), v);
  if (it == vs.end() || *it != v) throw InputError("vertex " + std::to_string(v.value) + " outside boundary graph");
  return static_cast<int>(it - vs.begin());
}

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace

BoundarySpace BoundarySpace::of(const UndirectedGraph& a) {
  BoundarySpace b;
  b.vertices = a.vertices();
  b.skel = Dense::from(Pdag::undirected(a));
  b.space = EdgeSpace::of(b.skel);
  return b;
}

Mask BoundarySpace::mask_of(const VertexSet& s) const {
  Mask m = 0;
  for (VertexId v : s) m |= Mask{1} << index_in(vertices, v);
  return m;
}

PreparedShadow prepare_shadow(const BoundarySpace& a, const Shadow& s) {
  PreparedShadow p;
  const Pdag& o = s.o;
  std::vector<int> map(o.size());
  for (std::size_t k = 0; k < o.size(); ++k) {
    map[k] = index_in(a.vertices, o.vertex(k));
    p.verts |= Mask{1} << map[k];
  }
  for (auto e : o.edges()) {
    int i = index_in(a.vertices, e.a), j = index_in(a.vertices, e.b);
    if (!(a.skel.adj[i] >> j & 1)) throw InputError("shadow edge is not an edge of the boundary graph");
    if (e.mark == EdgeMark::Undirected) {
      p.und.emplace_back(i, j);
      p.und.emplace_back(j, i);
    } else if (e.mark == EdgeMark::Forward) {
      p.dout[i] |= Mask{1} << j;
    } else {
      p.dout[j] |= Mask{1} << i;
    }
  }
  for (auto t : vstructs(Dense::from(o)))
    p.vs.push_back({static_cast<std::uint8_t>(map[t.a]), static_cast<std::uint8_t>(map[t.b]),
                    static_cast<std::uint8_t>(map[t.c])});
  std::sort(p.vs.begin(), p.vs.end());

  p.table = SpaceTable(a.space);
  const auto& edges = s.table.edges();
  std::vector<int> emap(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k)
    emap[k] = a.space.at(index_in(a.vertices, edges[k].tail), index_in(a.vertices, edges[k].head));
  std::vector<int> vmap(s.table.vertices().size());
  for (std::size_t k = 0; k < vmap.size(); ++k) vmap[k] = index_in(a.vertices, s.table.vertices()[k]);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    s.table.p1_bits().for_each_in_row(e, [&](std::size_t f) { p.table.p1.set(emap[e], emap[f]); });
    s.table.p2_bits().for_each_in_row(e, [&](std::size_t w) { p.table.p2.set(emap[e], vmap[w]); });
  }
  return p;
}

PreparedO prepare_o(const BoundarySpace& a, const Dense& o, bool with_base) {
  PreparedO p;
  p.d = o;
  if (with_base) p.base = tfp_space(a.space, o);
  p.present.assign(words_for(a.space.size()), 0);
  for (int i = 0; i < o.n; ++i)
    each_bit(o.out[i], [&](int j) {
      int e = a.space.at(i, j);
      p.present[e / 64] |= std::uint64_t{1} << (e % 64);
    });
  p.vs = vstructs(o);
  return p;
}

std::vector<VTriple> restrict_vs(const std::vector<VTriple>& vs, Mask verts) {
  std::vector<VTriple> out;
  for (auto t : vs)
    if ((verts >> t.a & 1) && (verts >> t.b & 1) && (verts >> t.c & 1)) out.push_back(t);
  return out;
}

bool local_ok(const BoundarySpace& a, const PreparedO& o, const PreparedShadow& s,
              const std::vector<VTriple>& vs_on_side) {
  const Dense& d = o.d;
  for (Mask m = s.verts; m; m &= m - 1) {
    int i = low(m);
    if (s.dout[i] & ~d.dout(i)) return false;
  }
  if (s.vs != vs_on_side) return false;
  for (auto [u, v] : s.und) {
    bool dir = d.dout(u) >> v & 1;
    bool und = d.und(u) >> v & 1;
    if (!dir && !und) continue;
    if (dir && strongly_protected(d, u, v)) continue;
    int uv = a.space.at(u, v), vu = a.space.at(v, u);
    bool witness = false;
    for (auto [x, y] : s.und) {
      if (!(d.dout(x) >> y & 1)) continue;
      int xy = a.space.at(x, y);
      if (s.table.p1.get(xy, uv) || (s.table.p2.get(xy, v) && s.table.p2.get(vu, x))) {
        witness = true;
        break;
      }
    }
    if (dir != witness) return false;
  }
  return true;
}

SpaceTable derived_table(const BoundarySpace& a, const PreparedO& o, const PreparedShadow& s1,
                         const PreparedShadow& s2) {
  SpaceTable t = o.base;
  const std::size_t m = a.space.size();
  const std::size_t w = t.p1.words_per_row();
  for (const PreparedShadow* s : {&s1, &s2}) {
    for (std::size_t e = 0; e < m; ++e) {
      if (s->table.p1.row_empty(e) && s->table.p2.row_empty(e)) continue;
      if (!(o.present[e / 64] >> (e % 64) & 1)) {
        auto [i, j] = a.space.edges[e];
        if (s->dout[i] >> j & 1) throw InvariantError("directed shadow edge missing from boundary graph");
        continue;
      }
      std::uint64_t* dst = t.p1.row(e);
      const std::uint64_t* src = s->table.p1.row(e);
      for (std::size_t k = 0; k < w; ++k) dst[k] |= src[k] & o.present[k];
      t.p2.or_row(e, s->table.p2, e);
    }
  }
  close_tfp(a.space, t);
  return t;
}

bool valid_space_table(const SpaceTable& t) {
  for (std::size_t e = 0; e < t.p1.rows(); ++e) {
    bool bad = false;
    t.p1.for_each_in_row(e, [&](std::size_t f) {
      if (f > e && t.p1.get(f, e)) bad = true;
    });
    if (bad) return false;
  }
  return true;
}

std::string projected_key(const BoundarySpace& a, const Dense& o, const SpaceTable& t, Mask keep) {
  std::string out;
  put_u32(out, static_cast<std::uint32_t>(std::popcount(keep)));
  each_bit(keep, [&](int i) { put_u32(out, a.vertices[i].value); });

  std::string edges;
  std::uint32_t ne = 0;
  std::vector<int> dom(a.space.size(), -1);
  int nd = 0;
  each_bit(keep, [&](int i) {
    each_bit(o.adj[i] & keep & ~((Mask{2} << i) - 1), [&](int j) {
      bool f = o.out[i] >> j & 1, b = o.out[j] >> i & 1;
      EdgeMark mark = f && b ? EdgeMark::Undirected : (f ? EdgeMark::Forward : EdgeMark::Backward);
      put_u32(edges, a.vertices[i].value);
      put_u32(edges, a.vertices[j].value);
      edges.push_back(static_cast<char>(mark));
      ++ne;
    });
    each_bit(o.out[i] & keep, [&](int j) { dom[a.space.at(i, j)] = nd++; });
  });
  put_u32(out, ne);
  out += edges;

  std::string p1, p2;
  std::uint32_t n1 = 0, n2 = 0;
  for (std::size_t e = 0; e < a.space.size(); ++e) {
    if (dom[e] < 0) continue;
    t.p1.for_each_in_row(e, [&](std::size_t f) {
      if (dom[f] < 0) return;
      put_u32(p1, static_cast<std::uint32_t>(dom[e]));
      put_u32(p1, static_cast<std::uint32_t>(dom[f]));
      ++n1;
    });
    t.p2.for_each_in_row(e, [&](std::size_t w) {
      if (!(keep >> w & 1)) return;
      put_u32(p2, static_cast<std::uint32_t>(dom[e]));
      put_u32(p2, static_cast<std::uint32_t>(std::popcount(keep & ((Mask{1} << w) - 1))));
      ++n2;
    });
  }
  put_u32(out, n1);
  out += p1;
  put_u32(out, n2);
  out += p2;
  return out;
}

}  // namespace detail

VertexSet DecompositionContext::boundary() const {
  VertexSet s = set_union(s1, s2);
  return set_union(s, h.neighborhood(s));
}

VertexSet DecompositionContext::child_boundary(int a) const {
  const VertexSet& ha = a == 1 ? h1 : h2;
  const VertexSet& sa = a == 1 ? s1 : s2;
  return set_union(sa, h.induced(ha).neighborhood(sa));
}

void DecompositionContext::validate() const {
  if (set_union(h1, h2) != h.vertices()) throw PreconditionError("context: h1 ∪ h2 must cover H");
  if (set_intersection(h1, h2) != i) throw PreconditionError("context: i must equal h1 ∩ h2");
  if (!is_subset(s1, h1) || !is_subset(s2, h2)) throw PreconditionError("context: bags must lie in their sides");
  if (set_intersection(s1, s2) != i) throw PreconditionError("context: s1 ∩ s2 must equal i");
  for (auto e : h.edges()) {
    bool in1 = set_contains(h1, e.a) && set_contains(h1, e.b);
    bool in2 = set_contains(h2, e.a) && set_contains(h2, e.b);
    if (!in1 && !in2) throw PreconditionError("context: an edge crosses the separator");
  }
}

namespace {

struct Setup {
  detail::BoundarySpace a;
  detail::PreparedO o;
  detail::PreparedShadow p1, p2;
};

Setup setup(const DecompositionContext& ctx, const Pdag& o, const Shadow& sh1, const Shadow& sh2) {
  ctx.validate();
  UndirectedGraph ag = ctx.h.induced(ctx.boundary());
  if (o.vertices() != ag.vertices() || skeleton(o) != ag)
    throw InputError("boundary graph does not match the context");
  if (!is_partial_mec(o)) throw PreconditionError("boundary graph is not a partial MEC");
  if (sh1.o.vertices() != ctx.child_boundary(1) || sh2.o.vertices() != ctx.child_boundary(2))
    throw PreconditionError("shadow vertex sets do not match the context");
  Setup s{detail::BoundarySpace::of(ag), {}, {}, {}};
  s.o = detail::prepare_o(s.a, detail::Dense::from(o));
  s.p1 = detail::prepare_shadow(s.a, sh1);
  s.p2 = detail::prepare_shadow(s.a, sh2);
  return s;
}

}  // namespace

TfpTable dpf(const DecompositionContext& ctx, const Pdag& o, const Shadow& sh1, const Shadow& sh2) {
  Setup s = setup(ctx, o, sh1, sh2);
  for (const Shadow* sh : {&sh1, &sh2})
    for (auto e : sh->o.directed_edges())
      if (!o.is_directed(e.tail, e.head)) throw InputError("dpf: directed shadow edge absent from boundary graph");
  return detail::export_table(s.a.space, detail::derived_table(s.a, s.o, s.p1, s.p2), o);
}

bool is_valid_dpf(const TfpTable& t) {
  const auto& p1 = t.p1_bits();
  for (std::size_t e = 0; e < p1.rows(); ++e) {
    bool bad = false;
    p1.for_each_in_row(e, [&](std::size_t f) {
      if (f != e && p1.get(f, e)) bad = true;
    });
    if (bad) return false;
  }
  return true;
}

bool is_extension(const DecompositionContext& ctx, const Pdag& o, const Shadow& sh1, const Shadow& sh2) {
  Setup s = setup(ctx, o, sh1, sh2);
  if (!detail::local_ok(s.a, s.o, s.p1, detail::restrict_vs(s.o.vs, s.p1.verts))) return false;
  if (!detail::local_ok(s.a, s.o, s.p2, detail::restrict_vs(s.o.vs, s.p2.verts))) return false;
  return detail::valid_space_table(detail::derived_table(s.a, s.o, s.p1, s.p2));
}

}  // namespace meccount
