#pragma once

#include <string>
#include <vector>

#include "meccount/extension.hpp"
#include "meccount/treedecomp.hpp"

namespace meccount::testing {

// one combining step of the counting recursion
struct CutInstance {
  UndirectedGraph g;
  DecompositionContext ctx;
  TreeDecomposition td;
};

// every cut the recursion performs on g, outermost first
std::vector<CutInstance> cut_instances(const UndirectedGraph& g, TdHeuristic h = TdHeuristic::MinFill);

struct CutReport {
  std::size_t mecs = 0;           // MECs of g
  std::size_t triples = 0;        // (O, sh1, sh2) candidates tested
  std::size_t accepted = 0;       // is_extension true
  std::size_t realized = 0;       // triples realized by some MEC of g
  std::size_t dpf_mismatch = 0;   // dpf != true table restricted to O
  std::size_t ext_mismatch = 0;   // is_extension disagrees with realization
  std::size_t merge_fail = 0;     // construct_mec output rejected or wrong
  std::size_t bijection_fail = 0; // per-triple counts or image mismatch
  std::size_t lbfs_fail = 0;      // ordering not a PEO or not respecting O
  std::vector<std::string> notes;

  bool ok() const {
    return dpf_mismatch == 0 && ext_mismatch == 0 && merge_fail == 0 && bijection_fail == 0 && lbfs_fail == 0;
  }
};

// dpf against ground truth for every MEC of g
void check_dpf(const CutInstance& c, CutReport& r);
// is_extension vs brute realization, construct_mec round trip, bijection counts
void check_extension(const CutInstance& c, CutReport& r);

}  // namespace meccount::testing
