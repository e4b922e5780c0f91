#include "meccount/counting.hpp"

#include <exception>
#include <mutex>

#include <omp.h>

#include "combine.hpp"

namespace meccount {

void ShadowTable::add(const ShadowKey& key, const Count& c) {
  if (c == 0) return;
  entries_[key] += c;
}

void ShadowTable::merge(const ShadowTable& other) {
  for (const auto& [k, c] : other.entries_) add(k, c);
}

Count ShadowTable::count_of(const ShadowKey& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? Count(0) : it->second;
}

Count ShadowTable::total() const {
  Count t = 0;
  for (const auto& [k, c] : entries_) t += c;
  return t;
}

ShadowTable brute_force_count(const UndirectedGraph& g, const EnumerationLimits& lim) {
  ShadowTable out(g);
  for (const Pdag& m : enumerate_mecs(g, lim)) {
    Shadow s{m, tfp_table(m)};
    if (out.count_of(s) != 0) throw InvariantError("two MECs share a full shadow");
    out.add(s, 1);
  }
  return out;
}

namespace {

using detail::Dense;
using detail::Mask;

struct Entry {
  detail::PreparedShadow shadow;
  Count count;
};

std::vector<Entry> prepare_entries(const detail::BoundarySpace& a, const ShadowTable& f) {
  std::vector<Entry> out;
  out.reserve(f.size());
  for (const auto& [key, c] : f.entries()) out.push_back({detail::prepare_shadow(a, shadow_from_key(key)), c});
  return out;
}

using KeyCounts = std::map<ShadowKey, Count>;

struct Combiner {
  const detail::BoundarySpace& a;
  const std::vector<Entry>& f1;
  const std::vector<Entry>& f2;
  Mask m1, m2, keep;

  void process(const Dense& o, KeyCounts& acc) const {
    detail::PreparedO po = detail::prepare_o(a, o, false);
    auto vs1 = detail::restrict_vs(po.vs, m1);
    std::vector<std::size_t> l1, l2;
    for (std::size_t k = 0; k < f1.size(); ++k)
      if (detail::local_ok(a, po, f1[k].shadow, vs1)) l1.push_back(k);
    if (l1.empty()) return;
    auto vs2 = detail::restrict_vs(po.vs, m2);
    for (std::size_t k = 0; k < f2.size(); ++k)
      if (detail::local_ok(a, po, f2[k].shadow, vs2)) l2.push_back(k);
    if (l2.empty()) return;
    po.base = detail::tfp_space(a.space, o);
    for (std::size_t k1 : l1)
      for (std::size_t k2 : l2) {
        auto t = detail::derived_table(a, po, f1[k1].shadow, f2[k2].shadow);
        if (!detail::valid_space_table(t)) continue;
        acc[detail::projected_key(a, o, t, keep)] += f1[k1].count * f2[k2].count;
      }
  }
};

Dense rebuild(const Dense& skel, const std::vector<Mask>& out) {
  Dense d = skel;
  d.out.fill(0);
  d.in.fill(0);
  for (int i = 0; i < d.n; ++i) {
    d.out[i] = out[i];
    detail::each_bit(out[i], [&](int j) { d.in[j] |= Mask{1} << i; });
  }
  return d;
}

void combine_serial(const Combiner& c, const std::vector<std::vector<Mask>>& os, KeyCounts& result) {
  for (const auto& o : os) c.process(rebuild(c.a.skel, o), result);
}

void combine_parallel(const Combiner& c, const std::vector<std::vector<Mask>>& os, KeyCounts& result, int threads) {
  std::exception_ptr error;
  std::mutex mu;
  const long n = static_cast<long>(os.size());
  const int nt = threads > 0 ? threads : omp_get_max_threads();
#pragma omp parallel num_threads(nt)
  {
    KeyCounts local;
#pragma omp for schedule(dynamic, 8)
    for (long k = 0; k < n; ++k) {
      try {
        c.process(rebuild(c.a.skel, os[k]), local);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!error) error = std::current_exception();
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    for (auto& [key, v] : local) result[key] += v;
  }
  if (error) std::rethrow_exception(error);
}

ShadowTable rec(const UndirectedGraph& g, const TreeDecomposition& td, const CountOptions& opts) {
  if (td.bags.size() == 1) return brute_force_count(g, opts.limits);

  TdCut cut = cut_last_child(td, td.root);
  const VertexSet& r1 = td.bags[td.root];
  const VertexSet& r2 = td.bags[cut.r2];
  UndirectedGraph g1 = g.induced(cut.td1.vertices());
  UndirectedGraph g2 = g.induced(cut.td2.vertices());
  ShadowTable f1 = rec(g1, cut.td1, opts);
  ShadowTable f2 = rec(g2, cut.td2, opts);

  VertexSet r12 = set_union(r1, r2);
  UndirectedGraph ag = g.induced(set_union(r12, g.neighborhood(r12)));
  if (ag.num_edges() > opts.limits.partial_mec_edges)
    throw CapacityError("boundary graph has " + std::to_string(ag.num_edges()) +
                        " edges, above the partial MEC enumeration cap");
  auto a = detail::BoundarySpace::of(ag);
  VertexSet out_verts = set_union(r1, g.neighborhood(r1));

  auto e1 = prepare_entries(a, f1);
  auto e2 = prepare_entries(a, f2);
  Combiner c{a, e1, e2, a.mask_of(f1.domain().vertices()), a.mask_of(f2.domain().vertices()), a.mask_of(out_verts)};

  std::vector<std::vector<Mask>> os;
  detail::for_each_partial_mec(a.skel, [&](const Dense& o) { os.emplace_back(o.out.begin(), o.out.begin() + o.n); });

  KeyCounts result;
  if (opts.execution == Execution::Serial)
    combine_serial(c, os, result);
  else
    combine_parallel(c, os, result, opts.threads);

  ShadowTable out(g.induced(out_verts));
  for (const auto& [key, v] : result) out.add(key, v);
  return out;
}

}  // namespace

ShadowTable count_rec(const UndirectedGraph& g, const TreeDecomposition& td, std::size_t r1, const CountOptions& opts) {
  if (r1 != td.root) throw PreconditionError("count_rec: r1 must be the decomposition root");
  if (auto v = validate_td(g, td); !v) throw PreconditionError("count_rec: invalid decomposition: " + v.diagnostic);
  return rec(g, td, opts);
}

CountReport count_mecs_report(const UndirectedGraph& g, CountMethod m, const CountOptions& opts) {
  CountReport report;
  report.count = 1;
  report.method = m;
  if (m == CountMethod::Auto)
    report.method = g.num_edges() <= opts.auto_brute_edges ? CountMethod::Brute : CountMethod::Fpt;
  for (const VertexSet& comp : g.components()) {
    UndirectedGraph c = g.induced(comp);
    if (c.num_edges() == 0) continue;
    if (report.method == CountMethod::Brute) {
      report.count *= brute_count_mecs(c, opts.limits);
      continue;
    }
    TreeDecomposition td = tree_decomposition(c, opts.heuristic);
    if (auto v = validate_td(c, td); !v) throw InvariantError("heuristic decomposition invalid: " + v.diagnostic);
    report.width = std::max(report.width, td.width());
    report.bags += td.bags.size();
    report.count *= rec(c, td, opts).total();
  }
  return report;
}

Count count_mecs(const UndirectedGraph& g, CountMethod m, const CountOptions& opts) {
  return count_mecs_report(g, m, opts).count;
}

}  // namespace meccount
