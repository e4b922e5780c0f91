#include "meccount/shadow.hpp"

#include <string>

#include "combine.hpp"

namespace meccount {

Shadow shadow_of_mec(const Pdag& m, const VertexSet& y) {
  if (!is_mec(m)) throw PreconditionError("shadow_of_mec: input is not an MEC");
  Pdag o = induced_subgraph(m, y);
  TfpTable t = restrict_table(tfp_table(m), o);
  return {std::move(o), std::move(t)};
}

Shadow project_shadow(const Shadow& s, const VertexSet& x) {
  Pdag o = induced_subgraph(s.o, x);
  TfpTable t = restrict_table(s.table, o);
  return {std::move(o), std::move(t)};
}

namespace {

void put(std::string& out, std::uint32_t v) { detail::put_u32(out, v); }

struct Reader {
  const std::string& s;
  std::size_t pos = 0;
  std::uint32_t u32() {
    if (pos + 4 > s.size()) throw InputError("truncated shadow key");
    std::uint32_t v = 0;
    for (int k = 0; k < 4; ++k) v |= std::uint32_t{static_cast<std::uint8_t>(s[pos + k])} << (8 * k);
    pos += 4;
    return v;
  }
  std::uint8_t u8() {
    if (pos >= s.size()) throw InputError("truncated shadow key");
    return static_cast<std::uint8_t>(s[pos++]);
  }
};

}  // namespace

ShadowKey shadow_key(const Shadow& s) {
  ShadowKey out;
  const auto& vs = s.o.vertices();
  put(out, static_cast<std::uint32_t>(vs.size()));
  for (auto v : vs) put(out, v.value);
  auto es = s.o.edges();
  put(out, static_cast<std::uint32_t>(es.size()));
  for (auto e : es) {
    put(out, e.a.value);
    put(out, e.b.value);
    out.push_back(static_cast<char>(e.mark));
  }
  const auto& p1 = s.table.p1_bits();
  const auto& p2 = s.table.p2_bits();
  put(out, static_cast<std::uint32_t>(p1.count()));
  for (std::size_t e = 0; e < p1.rows(); ++e)
    p1.for_each_in_row(e, [&](std::size_t f) {
      put(out, static_cast<std::uint32_t>(e));
      put(out, static_cast<std::uint32_t>(f));
    });
  put(out, static_cast<std::uint32_t>(p2.count()));
  for (std::size_t e = 0; e < p2.rows(); ++e)
    p2.for_each_in_row(e, [&](std::size_t w) {
      put(out, static_cast<std::uint32_t>(e));
      put(out, static_cast<std::uint32_t>(w));
    });
  return out;
}

Shadow shadow_from_key(const ShadowKey& key) {
  Reader r{key};
  std::vector<VertexId> vs(r.u32());
  for (auto& v : vs) v = vid(r.u32());
  Pdag o(vs);
  for (std::uint32_t n = r.u32(); n; --n) {
    VertexId a = vid(r.u32()), b = vid(r.u32());
    auto mark = static_cast<EdgeMark>(r.u8());
    if (mark == EdgeMark::Undirected)
      o.add_undirected(a, b);
    else if (mark == EdgeMark::Forward)
      o.add_directed(a, b);
    else
      o.add_directed(b, a);
  }
  TfpTable t(o.ordered_edges(), o.vertices());
  for (std::uint32_t n = r.u32(); n; --n) {
    std::uint32_t e = r.u32(), f = r.u32();
    t.set_p1(t.edges().at(e), t.edges().at(f));
  }
  for (std::uint32_t n = r.u32(); n; --n) {
    std::uint32_t e = r.u32(), w = r.u32();
    t.set_p2(t.edges().at(e), t.vertices().at(w));
  }
  return {std::move(o), std::move(t)};
}

void enumerate_partial_mecs(const UndirectedGraph& u, const PdagVisitor& visit, const EnumerationLimits& lim) {
  if (u.num_edges() > lim.partial_mec_edges)
    throw CapacityError("partial MEC enumeration capped at " + std::to_string(lim.partial_mec_edges) + " edges");
  detail::for_each_partial_mec(detail::Dense::from(Pdag::undirected(u)),
                               [&](const detail::Dense& d) { visit(d.to_pdag(u.vertices())); });
}

std::vector<Pdag> partial_mecs(const UndirectedGraph& u, const EnumerationLimits& lim) {
  std::vector<Pdag> out;
  enumerate_partial_mecs(u, [&](const Pdag& p) { out.push_back(p); }, lim);
  return out;
}

}  // namespace meccount
