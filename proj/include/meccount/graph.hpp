#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "meccount/errors.hpp"

namespace meccount {

struct VertexId {
  std::uint32_t value = 0;
  friend constexpr auto operator<=>(VertexId, VertexId) = default;
};

constexpr VertexId vid(std::uint32_t v) { return VertexId{v}; }

// sorted, duplicate free
using VertexSet = std::vector<VertexId>;

VertexSet make_vertex_set(std::vector<VertexId> vs);
bool set_contains(const VertexSet& s, VertexId v);
bool is_subset(const VertexSet& a, const VertexSet& b);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

struct OrderedEdge {
  VertexId tail;
  VertexId head;
  friend constexpr auto operator<=>(const OrderedEdge&, const OrderedEdge&) = default;
};

struct UndirectedEdge {
  VertexId a;  // a < b
  VertexId b;
  friend constexpr auto operator<=>(const UndirectedEdge&, const UndirectedEdge&) = default;
};

class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  // throws InputError on self loops, duplicate edges or unknown endpoints
  UndirectedGraph(VertexSet vertices, const std::vector<std::pair<VertexId, VertexId>>& edges);

  static UndirectedGraph from_edges(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);

  const VertexSet& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_edges() const { return edge_count_; }
  bool contains(VertexId v) const;
  const VertexSet& neighbors(VertexId v) const;
  bool adjacent(VertexId a, VertexId b) const;
  std::vector<UndirectedEdge> edges() const;

  UndirectedGraph induced(const VertexSet& s) const;
  // N(X) \ X
  VertexSet neighborhood(const VertexSet& x) const;
  std::vector<VertexSet> components() const;
  bool is_connected() const;

  friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

 private:
  std::size_t index_of(VertexId v) const;

  VertexSet vertices_;
  std::vector<VertexSet> adjacency_;
  std::size_t edge_count_ = 0;
};

enum class EdgeMark : std::uint8_t { Undirected, Forward, Backward };

struct MarkedEdge {
  VertexId a;  // a < b
  VertexId b;
  EdgeMark mark;  // Forward means a -> b
  friend constexpr auto operator<=>(const MarkedEdge&, const MarkedEdge&) = default;
};

// Partially directed graph over at most 64 vertices.
// u - v is stored as both directions present, u -> v as only (u,v).
class Pdag {
 public:
  using Mask = std::uint64_t;
  static constexpr std::size_t kMaxVertices = 64;

  Pdag() = default;
  explicit Pdag(VertexSet vertices);
  static Pdag undirected(const UndirectedGraph& g);

  void add_undirected(VertexId a, VertexId b);
  void add_directed(VertexId tail, VertexId head);
  void set_directed(VertexId tail, VertexId head);  // edge must exist
  void set_undirected(VertexId a, VertexId b);      // edge must exist
  void remove_edge(VertexId a, VertexId b);

  const VertexSet& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  std::optional<std::size_t> find(VertexId v) const;
  std::size_t index_of(VertexId v) const;  // throws InputError
  VertexId vertex(std::size_t i) const { return vertices_[i]; }
  bool contains(VertexId v) const { return find(v).has_value(); }

  // local-index views
  Mask adj_mask(std::size_t i) const { return adj_[i]; }
  Mask out_mask(std::size_t i) const { return out_[i]; }  // all ordered edges (i,j)
  Mask directed_out_mask(std::size_t i) const { return out_[i] & ~in_of(i); }
  Mask directed_in_mask(std::size_t i) const { return in_of(i) & ~out_[i]; }
  Mask undirected_mask(std::size_t i) const { return out_[i] & in_of(i); }
  Mask all_mask() const;

  bool adjacent(VertexId a, VertexId b) const;
  bool has_ordered(VertexId tail, VertexId head) const;
  bool is_directed(VertexId tail, VertexId head) const;
  bool is_undirected(VertexId a, VertexId b) const;

  std::size_t num_edges() const;
  std::vector<OrderedEdge> ordered_edges() const;  // sorted
  std::vector<MarkedEdge> edges() const;           // sorted
  std::vector<OrderedEdge> directed_edges() const;

  friend bool operator==(const Pdag&, const Pdag&) = default;

 private:
  Mask in_of(std::size_t i) const;
  std::pair<std::size_t, std::size_t> pair_index(VertexId a, VertexId b) const;

  VertexSet vertices_;
  std::vector<Mask> adj_;
  std::vector<Mask> out_;
};

inline Pdag::Mask bit(std::size_t i) { return Pdag::Mask{1} << i; }

Pdag induced_subgraph(const Pdag& p, const VertexSet& s);
// every vertex adjacent to some member of x (members of x included when adjacent to each other)
VertexSet neighbors(const Pdag& p, const VertexSet& x);
UndirectedGraph skeleton(const Pdag& p);
// components of the undirected part; every vertex appears in exactly one
std::vector<VertexSet> undirected_components(const Pdag& p);
// throws PreconditionError on opposite orientations of one edge
Pdag markov_union(std::span<const Pdag> inputs);
Pdag markov_union(std::initializer_list<Pdag> inputs);

bool is_chordal(const UndirectedGraph& g);

}  // namespace meccount
