#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "meccount/graph.hpp"

namespace meccount {

using Count = boost::multiprecision::cpp_int;

struct VStructure {
  VertexId a;  // a < c
  VertexId b;
  VertexId c;
  friend constexpr auto operator<=>(const VStructure&, const VStructure&) = default;
};

struct EnumerationLimits {
  std::size_t orientation_edges = 24;
  std::size_t andersson_edges = 12;
  std::size_t partial_mec_edges = 40;
};

// sorted
std::vector<VStructure> v_structures(const Pdag& p);

bool is_chain_graph(const Pdag& p);
// e must be a directed edge of p
bool is_strongly_protected(const Pdag& p, OrderedEdge e);
bool is_partial_mec(const Pdag& p);
bool is_mec(const Pdag& p);

using PdagVisitor = std::function<void(const Pdag&)>;

void enumerate_acyclic_orientations(const UndirectedGraph& u, const PdagVisitor& visit,
                                    const EnumerationLimits& lim = {});
std::vector<Pdag> acyclic_orientations(const UndirectedGraph& u, const EnumerationLimits& lim = {});

// every MEC with skeleton u, in a deterministic order
std::vector<Pdag> enumerate_mecs(const UndirectedGraph& u, const EnumerationLimits& lim = {});

Count brute_count_mecs(const UndirectedGraph& u, const EnumerationLimits& lim = {});
Count brute_count_mecs_andersson(const UndirectedGraph& u, const EnumerationLimits& lim = {});

bool is_dag(const Pdag& p);
Pdag cpdag_of_dag(const Pdag& d, const EnumerationLimits& lim = {});
// some DAG in the class of the MEC m
Pdag dag_member(const Pdag& m);
Pdag project_mec(const Pdag& m, const VertexSet& s, const EnumerationLimits& lim = {});

}  // namespace meccount
