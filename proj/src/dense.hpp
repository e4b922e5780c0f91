#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "meccount/bitmatrix.hpp"
#include "meccount/graph.hpp"
#include "meccount/tfp.hpp"

namespace meccount::detail {

using Mask = Pdag::Mask;

inline int low(Mask m) { return std::countr_zero(m); }

template <typename F>
inline void each_bit(Mask m, F&& f) {
  while (m) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

// fixed-size mask copy of a Pdag, cheap to build and mutate in enumeration loops
struct Dense {
  int n = 0;
  std::array<Mask, 64> adj{};
  std::array<Mask, 64> out{};
  std::array<Mask, 64> in{};

  Mask und(int i) const { return out[i] & in[i]; }
  Mask dout(int i) const { return out[i] & ~in[i]; }
  Mask din(int i) const { return in[i] & ~out[i]; }
  Mask all() const { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

  void add_skel(int i, int j) {
    adj[i] |= Mask{1} << j;
    adj[j] |= Mask{1} << i;
  }
  void set_dir(int i, int j) {
    out[i] |= Mask{1} << j;
    in[j] |= Mask{1} << i;
    out[j] &= ~(Mask{1} << i);
    in[i] &= ~(Mask{1} << j);
  }
  void set_und(int i, int j) {
    out[i] |= Mask{1} << j;
    in[j] |= Mask{1} << i;
    out[j] |= Mask{1} << i;
    in[i] |= Mask{1} << j;
  }
  void clear_marks(int i, int j) {
    out[i] &= ~(Mask{1} << j);
    in[j] &= ~(Mask{1} << i);
    out[j] &= ~(Mask{1} << i);
    in[i] &= ~(Mask{1} << j);
  }

  static Dense from(const Pdag& p);
  // marks of `d` rebuilt as a Pdag over `vertices`
  Pdag to_pdag(const VertexSet& vertices) const;
};

bool chordal_und(const Dense& d, Mask verts);
bool chain_graph(const Dense& d);
bool has_forbidden_pattern(const Dense& d);  // induced u->v-w
bool partial_mec(const Dense& d);
bool strongly_protected(const Dense& d, int u, int v);
bool mec(const Dense& d);

struct VTriple {
  std::uint8_t a, b, c;
  friend auto operator<=>(const VTriple&, const VTriple&) = default;
};
std::vector<VTriple> vstructs(const Dense& d);

// ordered-edge index over a skeleton: every (i,j) with i~j, sorted by (i,j)
struct EdgeSpace {
  int n = 0;
  std::array<Mask, 64> adj{};
  std::vector<std::pair<std::uint8_t, std::uint8_t>> edges;
  std::vector<int> index;  // n*n, -1 when absent

  static EdgeSpace of(const Dense& skel);
  int at(int i, int j) const { return index[i * n + j]; }
  std::size_t size() const { return edges.size(); }
};

struct SpaceTable {
  BitMatrix p1;  // edges x edges
  BitMatrix p2;  // edges x vertices
  SpaceTable() = default;
  explicit SpaceTable(const EdgeSpace& s) : p1(s.size(), s.size()), p2(s.size(), s.n) {}
  friend bool operator==(const SpaceTable&, const SpaceTable&) = default;
};

// length-two seeds of every ordered edge path u,v,w in g with u,w non-adjacent
void seed_tfp(const EdgeSpace& s, const Dense& g, SpaceTable& t);
// transitive closure of both relations, dropping (e,e) and (e,head(e))
void close_tfp(const EdgeSpace& s, SpaceTable& t);
SpaceTable tfp_space(const EdgeSpace& s, const Dense& g);
// host shares the space's vertex indexing; its ordered edges form the domain
TfpTable export_table(const EdgeSpace& s, const SpaceTable& t, const Pdag& host);

namespace pm {

inline bool reach(const Dense& d, int s, int t) {
  Mask seen = Mask{1} << s, frontier = seen;
  while (frontier) {
    int i = low(frontier);
    frontier &= frontier - 1;
    Mask nb = d.out[i] & ~seen;
    if (nb >> t & 1) return true;
    seen |= nb;
    frontier |= nb;
  }
  return false;
}

// patterns that no later assignment can repair
inline bool undirected_ok(const Dense& d, int i, int j) {
  return !(d.din(i) & ~d.adj[j] & ~(Mask{1} << j)) && !(d.din(j) & ~d.adj[i] & ~(Mask{1} << i));
}
inline bool directed_ok(const Dense& d, int i, int j) {
  return !(d.und(j) & ~d.adj[i] & ~(Mask{1} << i)) && !reach(d, j, i);
}

template <typename F>
void rec(Dense& d, const std::vector<std::pair<int, int>>& es, std::size_t k, F& f) {
  if (k == es.size()) {
    if (partial_mec(d)) f(static_cast<const Dense&>(d));
    return;
  }
  auto [i, j] = es[k];
  d.set_und(i, j);
  if (undirected_ok(d, i, j)) rec(d, es, k + 1, f);
  d.set_dir(i, j);
  if (directed_ok(d, i, j)) rec(d, es, k + 1, f);
  d.set_dir(j, i);
  if (directed_ok(d, j, i)) rec(d, es, k + 1, f);
  d.clear_marks(i, j);
}

}  // namespace pm

// every partial MEC with skeleton `skel` (marks of skel ignored), each once
template <typename F>
void for_each_partial_mec(const Dense& skel, F&& f) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < skel.n; ++i) each_bit(skel.adj[i] & ~((Mask{2} << i) - 1), [&](int j) { es.emplace_back(i, j); });
  Dense d = skel;
  d.out.fill(0);
  d.in.fill(0);
  pm::rec(d, es, 0, f);
}

}  // namespace meccount::detail
