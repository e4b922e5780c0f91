#pragma once

#include <string>
#include <vector>

#include "meccount/graph.hpp"
#include "meccount/mecrules.hpp"
#include "meccount/tfp.hpp"

namespace meccount {

struct Shadow {
  Pdag o;
  TfpTable table;  // over o's ordered edges and vertices
  friend bool operator==(const Shadow&, const Shadow&) = default;
};

// canonical byte encoding
using ShadowKey = std::string;

Shadow shadow_of_mec(const Pdag& m, const VertexSet& y);
Shadow project_shadow(const Shadow& s, const VertexSet& x);
ShadowKey shadow_key(const Shadow& s);
Shadow shadow_from_key(const ShadowKey& key);

void enumerate_partial_mecs(const UndirectedGraph& u, const PdagVisitor& visit, const EnumerationLimits& lim = {});
std::vector<Pdag> partial_mecs(const UndirectedGraph& u, const EnumerationLimits& lim = {});

}  // namespace meccount
