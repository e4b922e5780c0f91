#pragma once

#include <string>
#include <vector>

#include "dense.hpp"
#include "meccount/shadow.hpp"

namespace meccount::detail {

inline void put_u32(std::string& out, std::uint32_t v) {
  for (int k = 0; k < 4; ++k) out.push_back(static_cast<char>((v >> (8 * k)) & 0xff));
}

// the boundary graph A with its ordered-edge index space
struct BoundarySpace {
  VertexSet vertices;
  Dense skel;
  EdgeSpace space;

  static BoundarySpace of(const UndirectedGraph& a);
  Mask mask_of(const VertexSet& s) const;  // throws InputError on vertices outside A
};

// a child shadow re-indexed into A
struct PreparedShadow {
  Mask verts = 0;
  std::array<Mask, 64> dout{};
  std::vector<std::pair<int, int>> und;  // both orientations of every undirected edge
  std::vector<VTriple> vs;
  SpaceTable table;
};

PreparedShadow prepare_shadow(const BoundarySpace& a, const Shadow& s);

// a candidate boundary partial MEC with its own TFP table
struct PreparedO {
  Dense d;
  SpaceTable base;
  std::vector<std::uint64_t> present;  // ordered edges of O, one bit per space edge
  std::vector<VTriple> vs;
};

// the TFP table of O is filled only when with_base is set
PreparedO prepare_o(const BoundarySpace& a, const Dense& o, bool with_base = true);

// v-structures of O restricted to `verts`
std::vector<VTriple> restrict_vs(const std::vector<VTriple>& vs, Mask verts);

// extension items 1-3 for one side; vs_on_side = v-structures of O[V(O_a)]
bool local_ok(const BoundarySpace& a, const PreparedO& o, const PreparedShadow& s, const std::vector<VTriple>& vs_on_side);

SpaceTable derived_table(const BoundarySpace& a, const PreparedO& o, const PreparedShadow& s1, const PreparedShadow& s2);
bool valid_space_table(const SpaceTable& t);

// shadow_key of the shadow (O, t) projected onto `keep`
std::string projected_key(const BoundarySpace& a, const Dense& o, const SpaceTable& t, Mask keep);

}  // namespace meccount::detail
