#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "meccount/bitmatrix.hpp"
#include "meccount/graph.hpp"

namespace meccount {

// P1 over (edge, edge) and P2 over (edge, vertex), indexed by the host's sorted
// ordered edges and sorted vertices
class TfpTable {
 public:
  TfpTable() = default;
  TfpTable(std::vector<OrderedEdge> edges, VertexSet vertices);

  const std::vector<OrderedEdge>& edges() const { return edges_; }
  const VertexSet& vertices() const { return vertices_; }

  std::optional<std::size_t> edge_index(OrderedEdge e) const;
  std::optional<std::size_t> vertex_index(VertexId v) const;

  bool p1(OrderedEdge from, OrderedEdge to) const;
  bool p2(OrderedEdge from, VertexId to) const;
  // throws InputError outside the domain, PreconditionError on the excluded diagonal
  void set_p1(OrderedEdge from, OrderedEdge to);
  void set_p2(OrderedEdge from, VertexId to);

  std::vector<std::pair<OrderedEdge, OrderedEdge>> p1_entries() const;
  std::vector<std::pair<OrderedEdge, VertexId>> p2_entries() const;
  bool empty() const { return p1_.count() == 0 && p2_.count() == 0; }

  const BitMatrix& p1_bits() const { return p1_; }
  const BitMatrix& p2_bits() const { return p2_; }
  BitMatrix& p1_bits() { return p1_; }
  BitMatrix& p2_bits() { return p2_; }

  friend bool operator==(const TfpTable&, const TfpTable&) = default;

 private:
  std::vector<OrderedEdge> edges_;
  VertexSet vertices_;
  BitMatrix p1_;
  BitMatrix p2_;
};

using TfpTarget = std::variant<OrderedEdge, VertexId>;

// plain simple-path search; `from` must be an ordered edge of p
bool tfp_exists(const Pdag& p, OrderedEdge from, TfpTarget to);

// requires a chain graph with chordal undirected components
TfpTable tfp_table(const Pdag& p);

// restriction of a table to the ordered edges and vertices of `o`
TfpTable restrict_table(const TfpTable& t, const Pdag& o);

bool is_canonical_source(const Pdag& p, VertexId s);

}  // namespace meccount
