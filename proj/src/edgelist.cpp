#include "meccount/edgelist.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace meccount {

LabeledGraph parse_edge_list(std::istream& in) {
  std::vector<std::pair<std::string, std::string>> raw;
  std::set<std::pair<std::string, std::string>> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (tok.size() != 2) throw InputError(where + "expected two vertex labels, got " + std::to_string(tok.size()));
    if (tok[0] == tok[1]) throw InputError(where + "self loop on " + tok[0]);
    auto key = std::minmax(tok[0], tok[1]);
    if (!seen.emplace(key.first, key.second).second)
      throw InputError(where + "duplicate edge " + tok[0] + " " + tok[1]);
    raw.emplace_back(tok[0], tok[1]);
  }

  LabeledGraph out;
  std::set<std::string> names;
  for (const auto& [a, b] : raw) {
    names.insert(a);
    names.insert(b);
  }
  out.labels.assign(names.begin(), names.end());
  std::map<std::string, std::uint32_t> id;
  for (std::uint32_t k = 0; k < out.labels.size(); ++k) id[out.labels[k]] = k;
  VertexSet vs;
  for (std::uint32_t k = 0; k < out.labels.size(); ++k) vs.push_back(vid(k));
  std::vector<std::pair<VertexId, VertexId>> es;
  for (const auto& [a, b] : raw) es.emplace_back(vid(id[a]), vid(id[b]));
  out.graph = UndirectedGraph(vs, es);
  return out;
}

LabeledGraph parse_edge_list_string(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

LabeledGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return parse_edge_list(in);
}

}  // namespace meccount
