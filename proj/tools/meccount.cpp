// meccount command line: count, enumerate, verify, td
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <json.hpp>
#include <random>
#include <string>
#include <vector>

#include "meccount/counting.hpp"
#include "meccount/edgelist.hpp"
#include "meccount/errors.hpp"
#include "meccount/mecrules.hpp"
#include "meccount/treedecomp.hpp"

using namespace meccount;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0, kVerifyFailed = 1, kInput = 2, kCapacity = 3, kInvariant = 4;

void setup_logging() {
  auto log = spdlog::stderr_color_mt("meccount");
  spdlog::set_default_logger(log);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("MECCOUNT_LOG")) spdlog::set_level(spdlog::level::from_str(env));
}

TdHeuristic parse_heuristic(const std::string& s) { return s == "min-degree" ? TdHeuristic::MinDegree : TdHeuristic::MinFill; }

CountMethod parse_method(const std::string& s) {
  if (s == "brute") return CountMethod::Brute;
  if (s == "auto") return CountMethod::Auto;
  return CountMethod::Fpt;
}

const char* method_name(CountMethod m) {
  switch (m) {
    case CountMethod::Brute: return "brute";
    case CountMethod::Auto: return "auto";
    default: return "fpt";
  }
}

std::string format_mec(const Pdag& m, const LabeledGraph& lg) {
  if (m.num_edges() == 0) return "(no edges)";
  std::string out;
  for (const auto& e : m.edges()) {
    if (!out.empty()) out += "; ";
    const auto& a = lg.label(e.a);
    const auto& b = lg.label(e.b);
    switch (e.mark) {
      case EdgeMark::Undirected: out += a + " -- " + b; break;
      case EdgeMark::Forward: out += a + " -> " + b; break;
      case EdgeMark::Backward: out += b + " -> " + a; break;
    }
  }
  return out;
}

// joins per-component decompositions into one tree by linking their roots to the first
TreeDecomposition forest_decomposition(const UndirectedGraph& g, TdHeuristic h) {
  TreeDecomposition all;
  for (const auto& comp : g.components()) {
    TreeDecomposition td = tree_decomposition(g.induced(comp), h);
    std::size_t off = all.bags.size();
    if (off > 0) all.tree_edges.emplace_back(0, off + td.root);
    for (auto& b : td.bags) all.bags.push_back(std::move(b));
    for (auto [x, y] : td.tree_edges) all.tree_edges.emplace_back(off + x, off + y);
  }
  return all;
}

struct CountArgs {
  std::string file, method = "fpt", td = "min-fill";
  bool json = false, no_time = false;
  int threads = 0;
};

int cmd_count(const CountArgs& a) {
  LabeledGraph lg = read_edge_list_file(a.file);
  spdlog::info("read {} vertices, {} edges", lg.graph.num_vertices(), lg.graph.num_edges());
  CountOptions opts;
  opts.heuristic = parse_heuristic(a.td);
  opts.threads = a.threads;
  if (a.threads == 1) opts.execution = Execution::Serial;
  auto t0 = std::chrono::steady_clock::now();
  CountReport r = count_mecs_report(lg.graph, parse_method(a.method), opts);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (!a.json) {
    std::cout << r.count.str() << "\n";
    return kOk;
  }
  json j;
  j["count"] = r.count.str();
  j["method"] = method_name(r.method);
  j["width"] = r.width;
  j["bags"] = r.bags;
  j["wall_time_ms"] = a.no_time ? 0.0 : ms;
  std::cout << j.dump() << "\n";
  return kOk;
}

int cmd_enumerate(const std::string& file, std::size_t max_edges) {
  LabeledGraph lg = read_edge_list_file(file);
  if (lg.graph.num_edges() > max_edges)
    throw CapacityError("enumerate: " + std::to_string(lg.graph.num_edges()) + " edges exceed --max-edges " +
                        std::to_string(max_edges));
  std::vector<std::string> lines;
  for (const auto& m : enumerate_mecs(lg.graph)) lines.push_back(format_mec(m, lg));
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) std::cout << l << "\n";
  std::cout << "count " << lines.size() << "\n";
  return kOk;
}

UndirectedGraph random_graph(int n, std::mt19937_64& rng) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
  std::bernoulli_distribution extra(0.3);
  for (int v = 1; v < n; ++v) es.emplace_back(std::uniform_int_distribution<int>(0, v - 1)(rng), v);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (std::find(es.begin(), es.end(), std::pair<std::uint32_t, std::uint32_t>(u, v)) == es.end() && extra(rng))
        es.emplace_back(u, v);
  if (n == 1) return UndirectedGraph(VertexSet{vid(0)}, {});
  return UndirectedGraph::from_edges(es);
}

struct VerifyArgs {
  std::string file;
  int trials = 50, max_n = 6;
  std::uint64_t seed = 0;
  bool corrupt = false;
};

bool verify_case(const std::string& name, const UndirectedGraph& g, bool corrupt) {
  Count f = count_mecs(g, CountMethod::Fpt);
  if (corrupt) f += 1;
  Count b = brute_count_mecs(g);
  bool ok = f == b;
  std::cout << (ok ? "PASS " : "FAIL ") << name << " (" << f.str() << (ok ? " == " : " != ") << b.str() << ")\n";
  return ok;
}

int cmd_verify(const VerifyArgs& a) {
  std::size_t bad = 0;
  if (!a.file.empty()) {
    bad += !verify_case(a.file, read_edge_list_file(a.file).graph, a.corrupt);
  } else {
    if (a.max_n < 1) throw InputError("verify: --max-n must be at least 1");
    std::mt19937_64 rng(a.seed);
    for (int k = 0; k < a.trials; ++k) {
      int n = std::uniform_int_distribution<int>(1, a.max_n)(rng);
      UndirectedGraph g = random_graph(n, rng);
      bad += !verify_case("trial " + std::to_string(k) + " n=" + std::to_string(n) + " m=" +
                              std::to_string(g.num_edges()),
                          g, a.corrupt);
    }
  }
  spdlog::info("verify: {} failures", bad);
  return bad == 0 ? kOk : kVerifyFailed;
}

int cmd_td(const std::string& file, const std::string& heuristic, bool as_json) {
  LabeledGraph lg = read_edge_list_file(file);
  TreeDecomposition td = forest_decomposition(lg.graph, parse_heuristic(heuristic));
  if (!td.bags.empty()) {
    TdValidation v = validate_td(lg.graph, td);
    if (!v) throw InvariantError("td: invalid decomposition: " + v.diagnostic);
  }
  std::size_t width = td.bags.empty() ? 0 : td.width();
  if (as_json) {
    json j;
    j["heuristic"] = heuristic;
    j["width"] = width;
    j["root"] = td.root;
    j["bags"] = json::array();
    for (const auto& b : td.bags) {
      json bag = json::array();
      for (VertexId x : b) bag.push_back(lg.label(x));
      j["bags"].push_back(bag);
    }
    j["edges"] = json::array();
    for (auto [x, y] : td.tree_edges) j["edges"].push_back({x, y});
    std::cout << j.dump() << "\n";
    return kOk;
  }
  for (std::size_t k = 0; k < td.bags.size(); ++k) {
    std::cout << "bag " << k << ":";
    for (VertexId x : td.bags[k]) std::cout << " " << lg.label(x);
    std::cout << "\n";
  }
  for (auto [x, y] : td.tree_edges) std::cout << "edge " << x << " " << y << "\n";
  std::cout << "width " << width << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  setup_logging();
  CLI::App app{"count Markov equivalence classes with a given skeleton"};
  app.require_subcommand(1);

  CountArgs ca;
  auto* count = app.add_subcommand("count", "number of MECs whose skeleton is the input graph");
  count->add_option("file", ca.file, "edge list")->required();
  count->add_option("--method", ca.method)->check(CLI::IsMember({"fpt", "brute", "auto"}));
  count->add_option("--td", ca.td)->check(CLI::IsMember({"min-fill", "min-degree"}));
  count->add_flag("--json", ca.json);
  count->add_flag("--no-time", ca.no_time, "report wall_time_ms as 0");
  count->add_option("--threads", ca.threads)->check(CLI::NonNegativeNumber);

  std::string enum_file;
  std::size_t max_edges = 16;
  auto* enumerate = app.add_subcommand("enumerate", "list every MEC, one per line");
  enumerate->add_option("file", enum_file)->required();
  enumerate->add_option("--max-edges", max_edges);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "compare fpt against brute force");
  verify->add_option("file", va.file);
  verify->add_option("--trials", va.trials)->check(CLI::NonNegativeNumber);
  verify->add_option("--max-n", va.max_n);
  verify->add_option("--seed", va.seed);
  verify->add_flag("--corrupt", va.corrupt)->group("");

  std::string td_file, heuristic = "min-fill";
  bool td_json = false;
  auto* td = app.add_subcommand("td", "print a tree decomposition");
  td->add_option("file", td_file)->required();
  td->add_option("--heuristic", heuristic)->check(CLI::IsMember({"min-fill", "min-degree"}));
  td->add_flag("--json", td_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }

  try {
    if (*count) return cmd_count(ca);
    if (*enumerate) return cmd_enumerate(enum_file, max_edges);
    if (*verify) return cmd_verify(va);
    if (*td) return cmd_td(td_file, heuristic, td_json);
  } catch (const InputError& e) {
    spdlog::error("{}", e.what());
    return kInput;
  } catch (const CapacityError& e) {
    spdlog::error("{}", e.what());
    return kCapacity;
  } catch (const std::exception& e) {
    spdlog::error("{}", e.what());
    return kInvariant;
  }
  return kOk;
}
