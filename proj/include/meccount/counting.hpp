#pragma once

#include <map>

#include "meccount/graph.hpp"
#include "meccount/mecrules.hpp"
#include "meccount/shadow.hpp"
#include "meccount/treedecomp.hpp"

namespace meccount {

// sparse map shadow key -> count over one boundary graph; absent keys count 0
class ShadowTable {
 public:
  ShadowTable() = default;
  explicit ShadowTable(UndirectedGraph domain) : domain_(std::move(domain)) {}

  void add(const ShadowKey& key, const Count& c);
  void add(const Shadow& s, const Count& c) { add(shadow_key(s), c); }
  void merge(const ShadowTable& other);
  Count count_of(const ShadowKey& key) const;
  Count count_of(const Shadow& s) const { return count_of(shadow_key(s)); }
  Count total() const;
  std::size_t size() const { return entries_.size(); }
  const std::map<ShadowKey, Count>& entries() const { return entries_; }
  const UndirectedGraph& domain() const { return domain_; }

  friend bool operator==(const ShadowTable&, const ShadowTable&) = default;

 private:
  UndirectedGraph domain_;
  std::map<ShadowKey, Count> entries_;
};

enum class CountMethod { Fpt, Brute, Auto };
enum class Execution { Serial, Parallel };

struct CountOptions {
  TdHeuristic heuristic = TdHeuristic::MinFill;
  Execution execution = Execution::Parallel;
  int threads = 0;  // 0 leaves the OpenMP default
  std::size_t auto_brute_edges = 10;
  EnumerationLimits limits;
};

ShadowTable brute_force_count(const UndirectedGraph& g, const EnumerationLimits& lim = {});

// table over G[R1 ∪ N(R1, G)] with R1 = td.bags[r1]; td must be valid for g and rooted at r1
ShadowTable count_rec(const UndirectedGraph& g, const TreeDecomposition& td, std::size_t r1,
                      const CountOptions& opts = {});

struct CountReport {
  Count count;
  CountMethod method = CountMethod::Fpt;  // the method actually run
  std::size_t width = 0;                  // largest decomposition width over components (fpt only)
  std::size_t bags = 0;                   // total bags over components (fpt only)
};

CountReport count_mecs_report(const UndirectedGraph& g, CountMethod m = CountMethod::Fpt,
                              const CountOptions& opts = {});
Count count_mecs(const UndirectedGraph& g, CountMethod m = CountMethod::Fpt, const CountOptions& opts = {});

}  // namespace meccount
